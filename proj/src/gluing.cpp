#include "virmtc/gluing.hpp"

#include "virmtc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace virmtc {

std::vector<Bijection> fusion_ring_isos(const FusionRing& lr, const std::vector<double>& ld, const IndexSet& L,
                                        const FusionRing& rr, const std::vector<double>& rd, const IndexSet& R) {
    std::vector<Bijection> out;
    if (L.size() != R.size() || L.empty()) return out;
    std::vector<int> order{lr.unit()};
    for (int a : L)
        if (a != lr.unit()) order.push_back(a);
    std::vector<int> image(lr.size(), -1);
    std::vector<char> used(rr.size(), 0);
    if (std::find(R.begin(), R.end(), rr.unit()) == R.end()) return out;

    // every coefficient among already-assigned objects must agree
    auto consistent = [&](std::size_t upto) {
        const int a = order[upto];
        for (std::size_t i = 0; i <= upto; ++i)
            for (std::size_t j = 0; j <= upto; ++j) {
                const int b = order[i], c = order[j];
                if (lr.coeff(a, b, c) != rr.coeff(image[a], image[b], image[c])) return false;
                if (lr.coeff(b, c, a) != rr.coeff(image[b], image[c], image[a])) return false;
            }
        return true;
    };
    std::function<void(std::size_t)> go = [&](std::size_t k) {
        if (k == order.size()) {
            Bijection f;
            for (int a : order) f.emplace_back(a, image[a]);
            out.push_back(std::move(f));
            return;
        }
        const int a = order[k];
        for (int b : R) {
            if (used[b]) continue;
            if (k == 0 ? b != rr.unit() : b == rr.unit()) continue;
            if (std::abs(ld[a] - rd[b]) >= 1e-6) continue;
            image[a] = b;
            used[b] = 1;
            if (consistent(k)) go(k + 1);
            used[b] = 0;
            image[a] = -1;
        }
    };
    go(0);
    return out;
}

bool verify_iso(const FusionRing& lr, const FusionRing& rr, const Bijection& f) {
    std::set<int> left, right;
    for (const auto& [a, b] : f) {
        left.insert(a);
        right.insert(b);
    }
    if (left.size() != f.size() || right.size() != f.size()) return false;
    for (const auto& [a, fa] : f)
        for (const auto& [b, fb] : f)
            for (const auto& [c, fc] : f)
                if (lr.coeff(a, b, c) != rr.coeff(fa, fb, fc)) return false;
    return true;
}

GluingCandidate make_candidate(const MinimalCategory& A, const Subcategory& D, const MinimalCategory& B,
                               const Subcategory& E, const Bijection& f) {
    auto tag = [](const MinimalCategory& C, const Subcategory& S) {
        return "(" + std::to_string(C.model.p()) + "," + std::to_string(C.model.q()) + ")." + S.name;
    };
    GluingCandidate g;
    g.left = tag(A, D);
    g.right = tag(B, E);
    g.bijection = f;
    g.integral = true;
    g.twist_inverse = true;
    for (const auto& [a, b] : f) {
        const KacLabel x = A.model.simples()[a], y = B.model.simples()[b];
        g.labels.emplace_back(x, y);
        Rational s = A.data.weight(a) + B.data.weight(b);
        if (!is_integer(s)) g.integral = false;
        g.weight_sums.push_back(s);
        CycloNumber t = twist(A.model, x) * twist(B.model, y);
        if (!(t == CycloNumber(t.modulus(), Rational(1)))) g.twist_inverse = false;
    }
    return g;
}

std::vector<GluingCandidate> gluing_candidates(const MinimalCategory& A, const Subcategory& D,
                                               const MinimalCategory& B, const Subcategory& E) {
    std::vector<GluingCandidate> out;
    for (const auto& f : fusion_ring_isos(A.ring, A.dims, D.members, B.ring, B.dims, E.members)) {
        if (!verify_iso(A.ring, B.ring, f)) throw InvariantError("isomorphism search returned a non-isomorphism");
        out.push_back(make_candidate(A, D, B, E, f));
    }
    return out;
}

Subcategory named_subcategory(const MinimalCategory& C, const std::string& name) {
    if (name == "FULL") return {C.all(), name};
    if (name == "TRIVIAL") return {{C.ring.unit()}, name};
    const auto pats = named_patterns(C);
    auto it = pats.find(name);
    if (it == pats.end()) throw ValidationError("unknown subcategory name '" + name + "' (expected C1..C6, FULL or TRIVIAL)");
    return {it->second, name};
}

std::vector<ChainRow> scan_unitary_chain(int nmax) {
    if (nmax < 3) throw ValidationError("glue-scan needs nmax >= 3");
    std::vector<ChainRow> rows;
    for (int n = 3; n <= nmax; ++n) {
        MinimalCategory A(n + 1, n + 2), B(n + 2, n + 3);
        Subcategory D = named_subcategory(A, "C2"), E = named_subcategory(B, "C4");
        ChainRow row;
        row.n = n;
        auto cands = gluing_candidates(A, D, B, E);
        row.isos = static_cast<int>(cands.size());
        for (const auto& c : cands) row.integral = row.integral || c.integral;
        if (!cands.empty()) {
            row.left = cands.front().left;
            row.right = cands.front().right;
            row.weight_sums = cands.front().weight_sums;
        } else {
            row.left = "(" + std::to_string(n + 1) + "," + std::to_string(n + 2) + ").C2";
            row.right = "(" + std::to_string(n + 2) + "," + std::to_string(n + 3) + ").C4";
        }
        row.left_modular = is_modular(A, D.members).modular;
        row.right_modular = is_modular(B, E.members).modular;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace virmtc
