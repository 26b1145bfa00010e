#include "virmtc/subcat.hpp"

#include "virmtc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace virmtc {

bool is_subset(const IndexSet& a, const IndexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
    IndexSet u;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    return u;
}

bool is_fusion_closed(const FusionRing& r, const IndexSet& s) {
    if (!std::binary_search(s.begin(), s.end(), r.unit())) return false;
    for (int a : s)
        for (int b : s)
            for (const auto& [c, k] : r.product(a, b))
                if (!std::binary_search(s.begin(), s.end(), c)) return false;
    return true;
}

IndexSet ring_closure(const FusionRing& r, IndexSet seed) {
    std::vector<char> in(r.size(), 0);
    std::vector<int> list;
    seed.push_back(r.unit());
    for (int x : seed)
        if (!in[x]) {
            in[x] = 1;
            list.push_back(x);
        }
    // every new member is fused with everything already present
    for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            for (const auto& [c, k] : r.product(list[i], list[j]))
                if (!in[c]) {
                    in[c] = 1;
                    list.push_back(c);
                }
    std::sort(list.begin(), list.end());
    return list;
}

namespace {

bool size_then_lex(const IndexSet& a, const IndexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
}

}  // namespace

std::vector<IndexSet> enumerate_closed(const FusionRing& r) {
    std::set<IndexSet> fam;
    fam.insert(ring_closure(r, {}));
    for (int x = 0; x < r.size(); ++x) fam.insert(ring_closure(r, {x}));
    std::vector<IndexSet> frontier(fam.begin(), fam.end());
    while (!frontier.empty()) {
        std::vector<IndexSet> next;
        const std::vector<IndexSet> snapshot(fam.begin(), fam.end());
        for (const auto& A : frontier)
            for (const auto& B : snapshot) {
                if (is_subset(A, B) || is_subset(B, A)) continue;
                IndexSet J = ring_closure(r, set_union(A, B));
                if (fam.insert(J).second) next.push_back(J);
            }
        frontier = std::move(next);
    }
    std::vector<IndexSet> out(fam.begin(), fam.end());
    std::sort(out.begin(), out.end(), size_then_lex);
    return out;
}

std::vector<IndexSet> brute_force_closed(const FusionRing& r) {
    const int n = r.size();
    if (n > 20) throw ValidationError("brute-force enumeration limited to rank 20");
    std::vector<int> others;
    for (int i = 0; i < n; ++i)
        if (i != r.unit()) others.push_back(i);
    std::vector<IndexSet> out;
    for (unsigned long mask = 0; mask < (1UL << others.size()); ++mask) {
        IndexSet s{r.unit()};
        for (std::size_t i = 0; i < others.size(); ++i)
            if (mask >> i & 1) s.push_back(others[i]);
        std::sort(s.begin(), s.end());
        if (is_fusion_closed(r, s)) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), size_then_lex);
    return out;
}

IndexSet twist_candidates(const FusionRing& r, const std::vector<Rational>& theta, const IndexSet& D) {
    IndexSet out;
    for (int x : D) {
        bool ok = true;
        for (int y : D) {
            for (const auto& [z, k] : r.product(x, y))
                if (!is_integer(theta[z] - theta[x] - theta[y])) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (ok) out.push_back(x);
    }
    return out;
}

Subcategory closure(const MinimalCategory& C, const std::vector<KacLabel>& seed) {
    if (seed.empty()) throw ValidationError("closure needs a non-empty seed");
    IndexSet s;
    for (auto x : seed) s.push_back(C.model.index_of(x));
    Subcategory out{ring_closure(C.ring, s), ""};
    out.name = classify_named(C, out.members);
    return out;
}

std::map<std::string, IndexSet> named_patterns(const MinimalCategory& C) {
    const auto& M = C.model;
    const int p = M.p(), q = M.q();
    auto make = [&](auto&& gen) {
        std::set<int> s;
        gen(s);
        return IndexSet(s.begin(), s.end());
    };
    std::map<std::string, IndexSet> pat;
    pat["C1"] = make([&](auto& s) { for (int n = 1; n < q; ++n) s.insert(M.index_of({1, n})); });
    pat["C2"] = make([&](auto& s) { for (int n = 1; n < q; n += 2) s.insert(M.index_of({1, n})); });
    pat["C3"] = make([&](auto& s) { for (int m = 1; m < p; ++m) s.insert(M.index_of({m, 1})); });
    pat["C4"] = make([&](auto& s) { for (int m = 1; m < p; m += 2) s.insert(M.index_of({m, 1})); });
    pat["C5"] = make([&](auto& s) { s.insert(0); s.insert(M.index_of({1, q - 1})); });
    pat["C6"] = ring_closure(C.ring, set_union(pat["C2"], pat["C4"]));
    return pat;
}

std::string classify_named(const MinimalCategory& C, const IndexSet& D) {
    if (static_cast<int>(D.size()) == C.model.rank()) return "FULL";
    if (D.size() == 1) return "TRIVIAL";
    const auto pat = named_patterns(C);
    for (const char* k : {"C5", "C1", "C2", "C3", "C4", "C6"})
        if (pat.at(k) == D) return k;
    return "OTHER";
}

std::vector<Subcategory> enumerate_subcats(const MinimalCategory& C) {
    std::vector<Subcategory> out;
    for (auto& s : enumerate_closed(C.ring)) {
        std::string name = classify_named(C, s);
        out.push_back({std::move(s), std::move(name)});
    }
    return out;
}

std::vector<Subcategory> nontrivial(const std::vector<Subcategory>& all, int rank) {
    std::vector<Subcategory> out;
    for (const auto& s : all)
        if (s.members.size() > 1 && static_cast<int>(s.members.size()) < rank) out.push_back(s);
    return out;
}

IndexSet centralizer(const MinimalCategory& C, const IndexSet& D, const IndexSet& ambient) {
    IndexSet out;
    for (int x : ambient) {
        bool ok = true;
        for (int y : D)
            if (!C.data.s_centralizes(x, y)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(x);
    }
    return out;
}

CenterReport mueger_center(const MinimalCategory& C, const IndexSet& D) {
    std::vector<Rational> theta;
    for (int a = 0; a < C.model.rank(); ++a) theta.push_back(C.data.theta_exponent(a));
    return {centralizer(C, D, D), twist_candidates(C.ring, theta, D)};
}

ModularityReport is_modular(const MinimalCategory& C, const IndexSet& D, double float_threshold) {
    ModularityReport rep;
    ExactMatrix K = C.data.s_kernel(D);
    rep.rank_exact = exact_rank(K);
    rep.rank_float = float_rank(K, float_threshold);
    rep.center = mueger_center(C, D);
    rep.modular = rep.rank_exact == D.size();
    if (rep.modular != rep.center.trivial())
        throw InvariantError("exact rank and Mueger center disagree on a subcategory of (" +
                             std::to_string(C.model.p()) + "," + std::to_string(C.model.q()) + ")");
    return rep;
}

bool is_prime(const MinimalCategory& C, const IndexSet& D) {
    if (D.size() <= 1) return true;
    for (const auto& s : enumerate_closed(C.ring)) {
        if (s.size() <= 1 || s.size() >= D.size() || !is_subset(s, D)) continue;
        if (is_modular(C, s).modular) return false;
    }
    return true;
}

DeligneReport ring_deligne_check(const FusionRing& r, const std::vector<double>& dims, const IndexSet& D,
                                 const IndexSet& E, const IndexSet& ambient) {
    DeligneReport rep;
    const std::size_t nd = D.size(), ne = E.size();
    std::vector<int> img(nd * ne, -1);
    bool single = true;
    for (std::size_t i = 0; i < nd; ++i)
        for (std::size_t j = 0; j < ne; ++j) {
            const auto& v = r.product(D[i], E[j]);
            if (v.size() != 1 || v[0].second != 1) single = false;
            else img[i * ne + j] = v[0].first;
        }
    if (single) {
        IndexSet im(img.begin(), img.end());
        std::sort(im.begin(), im.end());
        rep.bijection = std::adjacent_find(im.begin(), im.end()) == im.end() && im == ambient;
    }
    if (rep.bijection) {
        std::vector<int> slot(r.size(), -1);
        for (std::size_t t = 0; t < img.size(); ++t) slot[img[t]] = static_cast<int>(t);
        rep.fusion = true;
        for (std::size_t t1 = 0; t1 < img.size() && rep.fusion; ++t1)
            for (std::size_t t2 = 0; t2 < img.size() && rep.fusion; ++t2)
                for (std::size_t t3 = 0; t3 < img.size(); ++t3) {
                    int lhs = r.coeff(img[t1], img[t2], img[t3]);
                    int rhs = r.coeff(D[t1 / ne], D[t2 / ne], D[t3 / ne]) * r.coeff(E[t1 % ne], E[t2 % ne], E[t3 % ne]);
                    if (lhs != rhs) {
                        rep.fusion = false;
                        break;
                    }
                }
    }
    const double fa = fpdim_of(dims, ambient), fd = fpdim_of(dims, D), fe = fpdim_of(dims, E);
    rep.fpdim = std::abs(fa - fd * fe) <= 1e-7 * fa;
    return rep;
}

DeligneReport deligne_factor_check(const MinimalCategory& C, const IndexSet& D, const IndexSet& E,
                                   const IndexSet& ambient) {
    DeligneReport rep = ring_deligne_check(C.ring, C.dims, D, E, ambient);
    rep.centralizer = centralizer(C, D, ambient) == E;
    return rep;
}

DeligneReport deligne_factor_check(const MinimalCategory& C, const IndexSet& D, const IndexSet& E) {
    return deligne_factor_check(C, D, E, C.all());
}

std::vector<std::string> labels_of(const MinimalCategory& C, const IndexSet& s) {
    std::vector<std::string> out;
    for (int a : s) out.push_back(C.model.simples()[a].str());
    return out;
}

}  // namespace virmtc
