#include "virmtc/extension.hpp"

#include "virmtc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace virmtc {

std::string ExtObject::id() const {
    if (kind == Kind::Induced) return "N" + label.str();
    return label.str() + (sign > 0 ? "+" : "-");
}

namespace {

void require_supported(int p) {
    if (p < 5 || (p % 4 != 1 && p % 4 != 2))
        throw ValidationError("the extension (1,1)+(1,p) of C_{p,p+1} is only built for p >= 5 with p = 1 or 2 (mod 4); got p=" +
                              std::to_string(p));
}

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

Eigen::MatrixXi ExtensionCategory::support(int w) const {
    const int f = static_cast<int>(fixed_.size());
    Eigen::MatrixXi A = Eigen::MatrixXi::Zero(f, f);
    for (int i = 0; i < f; ++i)
        for (const auto& [c, k] : amb_->ring.product(fixed_[i], w))
            if (fixed_pos_[c] >= 0) A(i, fixed_pos_[c]) = k;
    return A;
}

// Each local w acts on span{F^+ - F^-} through a signed matrix rho(w) with
// |rho(w)| = fusion support, rho(sigma w) = rho(w), and rho a representation of
// the local fusion ring.  Generators get free signs (up to relabeling F^+ <-> F^-),
// everything else is derived and then checked.
void ExtensionCategory::solve_signs() {
    const FusionRing& R = amb_->ring;
    const int n = R.size(), f = static_cast<int>(fixed_.size());
    auto cls = [&](int u) { return std::min(u, sigma_[u]); };

    std::vector<char> known(n, 0);
    auto mark = [&](int u) { known[u] = known[sigma_[u]] = 1; };
    auto lone_unknown = [&](int a, int b, const std::vector<char>& have) {
        int u = -1;
        for (const auto& [c, k] : R.product(a, b)) {
            if (have[c]) continue;
            if (u < 0) u = cls(c);
            else if (cls(c) != u) return -2;
        }
        return u;
    };
    auto peel = [&] {
        for (bool changed = true; changed;) {
            changed = false;
            for (int a : local_)
                for (int b : local_)
                    if (known[a] && known[b]) {
                        int u = lone_unknown(a, b, known);
                        if (u >= 0) {
                            mark(u);
                            changed = true;
                        }
                    }
        }
    };
    mark(R.unit());
    peel();
    std::vector<int> gens;
    for (;;) {
        auto it = std::find_if(local_.begin(), local_.end(), [&](int a) { return !known[a]; });
        if (it == local_.end()) break;
        gens.push_back(*it);
        mark(*it);
        peel();
    }

    struct Entry {
        int g, i, j;
        bool pinned;
    };
    std::vector<Entry> entries;
    for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
        Eigen::MatrixXi A = support(gens[g]);
        for (int i = 0; i < f; ++i)
            for (int j = i; j < f; ++j)
                if (A(i, j) != 0) {
                    if (A(i, j) != 1) throw InvariantError("generator support has a multiplicity above 1");
                    entries.push_back({g, i, j, false});
                }
    }
    std::vector<int> parent(f);
    std::iota(parent.begin(), parent.end(), 0);
    for (auto& e : entries)
        if (e.i != e.j && find_root(parent, e.i) != find_root(parent, e.j)) {
            parent[find_root(parent, e.i)] = find_root(parent, e.j);
            e.pinned = true;
        }
    std::vector<int> free;
    for (int t = 0; t < static_cast<int>(entries.size()); ++t)
        if (!entries[t].pinned) free.push_back(t);
    if (free.size() > 24) throw InvariantError("too many free signs in the split sector");

    std::vector<Eigen::MatrixXi> supp(n);
    for (int w : local_) supp[w] = support(w);
    auto within_support = [&](const Eigen::MatrixXi& M, int u) {
        for (int i = 0; i < f; ++i)
            for (int j = 0; j < f; ++j) {
                int a = std::abs(M(i, j)), s = supp[u](i, j);
                if (a > s || (s - a) % 2 != 0) return false;
            }
        return true;
    };

    sign_solutions_ = 0;
    for (unsigned long mask = 0; mask < (1UL << free.size()); ++mask) {
        std::vector<Eigen::MatrixXi> rho(n);
        std::vector<char> has(n, 0);
        auto assign = [&](int u, const Eigen::MatrixXi& M) {
            rho[u] = rho[sigma_[u]] = M;
            has[u] = has[sigma_[u]] = 1;
        };
        assign(R.unit(), Eigen::MatrixXi::Identity(f, f));
        std::vector<Eigen::MatrixXi> G(gens.size(), Eigen::MatrixXi::Zero(f, f));
        for (std::size_t t = 0, bit = 0; t < entries.size(); ++t) {
            const auto& e = entries[t];
            int s = 1;
            if (!e.pinned) s = (mask >> bit++ & 1) ? -1 : 1;
            G[e.g](e.i, e.j) = G[e.g](e.j, e.i) = s;
        }
        bool ok = true;
        for (std::size_t a = 0; a < gens.size() && ok; ++a)
            for (std::size_t b = a + 1; b < gens.size(); ++b)
                if (G[a] * G[b] != G[b] * G[a]) ok = false;
        if (!ok) continue;
        for (std::size_t g = 0; g < gens.size(); ++g) assign(gens[g], G[g]);

        for (bool changed = true; changed && ok;) {
            changed = false;
            for (int a : local_) {
                if (!ok) break;
                for (int b : local_) {
                    if (!has[a] || !has[b]) continue;
                    int u = lone_unknown(a, b, has);
                    if (u < 0) continue;
                    int mult = 0;
                    Eigen::MatrixXi M = rho[a] * rho[b];
                    for (const auto& [c, k] : R.product(a, b)) {
                        if (c == u || c == sigma_[u]) mult += k;
                        else M -= k * rho[c];
                    }
                    for (int i = 0; i < f && ok; ++i)
                        for (int j = 0; j < f; ++j)
                            if (M(i, j) % mult != 0) ok = false;
                    if (!ok) break;
                    M /= mult;
                    if (!within_support(M, u)) {
                        ok = false;
                        break;
                    }
                    assign(u, M);
                    changed = true;
                }
            }
        }
        if (!ok) continue;
        for (int a : local_)
            if (!has[a] || !within_support(rho[a], a)) ok = false;
        for (std::size_t x = 0; x < local_.size() && ok; ++x)
            for (std::size_t y = x; y < local_.size(); ++y) {
                int a = local_[x], b = local_[y];
                Eigen::MatrixXi M = rho[a] * rho[b];
                for (const auto& [c, k] : R.product(a, b)) M -= k * rho[c];
                if (!M.isZero()) {
                    ok = false;
                    break;
                }
            }
        if (!ok) continue;
        if (sign_solutions_++ == 0) rho_ = std::move(rho);
    }
    if (sign_solutions_ == 0) throw InvariantError("no consistent sign data for the split sector at p=" + std::to_string(p_));
}

bool ExtensionCategory::table(const std::vector<int>& tau, std::vector<int>& out, bool log) {
    const FusionRing& R = amb_->ring;
    const int n = static_cast<int>(objs_.size());
    const int norb = n - 2 * static_cast<int>(fixed_.size());
    out.assign(static_cast<std::size_t>(n) * n * n, 0);
    auto at = [&](int a, int b, int c) -> int& { return out[(static_cast<std::size_t>(a) * n + b) * n + c]; };
    auto split = [&](int w, int s) { return norb + 2 * fixed_pos_[w] + (s > 0 ? 0 : 1); };
    auto is_rep = [&](int w) { return w < sigma_[w]; };
    if (log) log_.clear();

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const ExtObject& A = objs_[a];
            const ExtObject& B = objs_[b];
            const int x = amb_->model.index_of(A.label), y = amb_->model.index_of(B.label);
            const auto& prod = R.product(x, y);
            const bool ia = A.kind == ExtObject::Kind::Induced, ib = B.kind == ExtObject::Kind::Induced;
            if (ia && ib) {
                for (const auto& [w, c] : prod) {
                    if (fixed_pos_[w] >= 0) {
                        at(a, b, split(w, 1)) += c;
                        at(a, b, split(w, -1)) += c;
                    } else {
                        at(a, b, orbit_obj_[w]) += c;
                    }
                }
            } else if (ia || ib) {
                const ExtObject& S = ia ? B : A;
                const int F = ia ? y : x, yv = ia ? x : y;
                bool touched = false;
                for (const auto& [w, c] : prod) {
                    if (fixed_pos_[w] >= 0) {
                        const int d = S.sign * rho_[yv](fixed_pos_[F], fixed_pos_[w]);
                        if ((c + d) % 2 != 0 || c + d < 0 || c - d < 0) return false;
                        at(a, b, split(w, 1)) += (c + d) / 2;
                        at(a, b, split(w, -1)) += (c - d) / 2;
                        touched = true;
                    } else if (is_rep(w)) {
                        at(a, b, orbit_obj_[w]) += c;
                    }
                }
                if (log && touched && a <= b && yv != R.unit()) log_.push_back(A.id() + " x " + B.id());
            } else {
                const int F = x, G = y, e1 = A.sign, e2 = B.sign;
                const int iF = fixed_pos_[F], iG = fixed_pos_[G];
                const int t = tau[iG];
                for (const auto& [w, c] : prod) {
                    if (fixed_pos_[w] >= 0) {
                        const int iw = fixed_pos_[w];
                        const int x1 = t * rho_[w](iG, iF), y1 = rho_[F](iG, iw), z1 = rho_[G](iF, iw);
                        const int Ap = c + x1 + y1 + z1, Am = c + x1 - y1 - z1;
                        const int Bp = c - x1 - y1 + z1, Bm = c - x1 + y1 - z1;
                        for (int v : {Ap, Am, Bp, Bm})
                            if (v % 4 != 0 || v < 0) return false;
                        int plus, minus;
                        if (e1 == e2) {
                            plus = e1 > 0 ? Ap : Am;
                            minus = e1 > 0 ? Am : Ap;
                        } else {
                            plus = e1 > 0 ? Bp : Bm;
                            minus = e1 > 0 ? Bm : Bp;
                        }
                        at(a, b, split(w, 1)) += plus / 4;
                        at(a, b, split(w, -1)) += minus / 4;
                    } else if (is_rep(w)) {
                        const int x1 = t * rho_[w](iG, iF);
                        const int Az = c + x1, Bz = c - x1;
                        if (Az % 2 != 0 || Az < 0 || Bz < 0) return false;
                        at(a, b, orbit_obj_[w]) += (e1 == e2 ? Az : Bz) / 2;
                    }
                }
                if (log && a <= b) log_.push_back(A.id() + " x " + B.id());
            }
        }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (at(a, b, c) != at(b, a, c)) return false;
    const int u = orbit_obj_[amb_->ring.unit()];
    for (int a = 0; a < n; ++a) {
        int total = 0;
        for (int b = 0; b < n; ++b) total += at(a, b, u);
        if (total != 1) return false;
    }
    return true;
}

ExtensionCategory::ExtensionCategory(int p) : p_(p) {
    require_supported(p);
    amb_ = std::make_shared<MinimalCategory>(p, p + 1);
    const MinimalModel& M = amb_->model;
    const int n = M.rank();
    sigma_.resize(n);
    for (int a = 0; a < n; ++a) sigma_[a] = M.index_of(simple_current_act(M, M.simples()[a]));
    for (int a = 0; a < n; ++a)
        if (is_integer(amb_->data.weight(sigma_[a]) - amb_->data.weight(a))) local_.push_back(a);
    fixed_pos_.assign(n, -1);
    orbit_obj_.assign(n, -1);
    for (int a : local_)
        if (sigma_[a] == a) {
            fixed_pos_[a] = static_cast<int>(fixed_.size());
            fixed_.push_back(a);
        }
    for (int a : local_)
        if (a < sigma_[a]) {
            orbit_obj_[a] = orbit_obj_[sigma_[a]] = static_cast<int>(objs_.size());
            ExtObject o;
            o.kind = ExtObject::Kind::Induced;
            o.label = M.simples()[a];
            o.partner = M.simples()[sigma_[a]];
            o.h_mod1 = amb_->data.theta_exponent(a);
            o.qdim = amb_->data.qdim(a);
            objs_.push_back(o);
        }
    for (int F : fixed_)
        for (int s : {1, -1}) {
            ExtObject o;
            o.kind = ExtObject::Kind::Split;
            o.label = o.partner = M.simples()[F];
            o.sign = s;
            o.h_mod1 = amb_->data.theta_exponent(F);
            o.qdim = amb_->data.qdim(F) / 2;
            objs_.push_back(o);
        }

    solve_signs();

    std::vector<std::string> ids;
    for (const auto& o : objs_) ids.push_back(o.id());
    const int f = static_cast<int>(fixed_.size());
    const int nobj = static_cast<int>(objs_.size());
    std::vector<int> tab;
    duality_solutions_ = 0;
    for (unsigned long mask = 0; mask < (1UL << f); ++mask) {
        std::vector<int> tau(f);
        for (int i = 0; i < f; ++i) tau[i] = (mask >> i & 1) ? -1 : 1;
        if (!table(tau, tab, false)) continue;
        FusionRing r(ids, orbit_obj_[amb_->ring.unit()]);
        for (int a = 0; a < nobj; ++a)
            for (int b = a; b < nobj; ++b)
                for (int c = 0; c < nobj; ++c) r.add(a, b, c, tab[(static_cast<std::size_t>(a) * nobj + b) * nobj + c]);
        r.finalize();
        if (!check_ring(r).ok()) continue;
        if (duality_solutions_++ == 0) {
            tau_ = tau;
            ring_ = std::move(r);
        }
    }
    if (duality_solutions_ == 0) throw InvariantError("no associative split fusion rules at p=" + std::to_string(p));
    table(tau_, tab, true);
    resolved_ = sign_solutions_ == 1 && duality_solutions_ == 1;
    dims_ = fpdims(ring_);
    for (const auto& o : objs_) theta_.push_back(o.h_mod1);
}

BaseProduct ExtensionCategory::base_product(int a, int b) const {
    const ExtObject& A = objs_.at(a);
    const ExtObject& B = objs_.at(b);
    const MinimalModel& M = amb_->model;
    const int x = M.index_of(A.label), y = M.index_of(B.label);
    const int norb = static_cast<int>(objs_.size()) - 2 * static_cast<int>(fixed_.size());
    BaseProduct out;
    const bool ia = A.kind == ExtObject::Kind::Induced, ib = B.kind == ExtObject::Kind::Induced;
    out.partner_sum = !ia && !ib;
    if (x == amb_->ring.unit() || y == amb_->ring.unit()) {
        out.partner_sum = false;
        out.known.emplace_back(x == amb_->ring.unit() ? b : a, 1);
        return out;
    }
    std::vector<int> known(objs_.size(), 0);
    for (const auto& [w, c] : amb_->ring.product(x, y)) {
        if (fixed_pos_[w] >= 0) {
            if (ia && ib) {
                known[norb + 2 * fixed_pos_[w]] += c;
                known[norb + 2 * fixed_pos_[w] + 1] += c;
            } else {
                out.pending.emplace_back(M.simples()[w], c);
            }
        } else if ((ia && ib) || w < sigma_[w]) {
            known[orbit_obj_[w]] += c;
        }
    }
    for (int c = 0; c < static_cast<int>(known.size()); ++c)
        if (known[c]) out.known.emplace_back(c, known[c]);
    return out;
}

std::vector<ExtObject> ext_simples(int p) { return ExtensionCategory(p).simples(); }

std::vector<std::pair<std::string, IndexSet>> ext_named(const ExtensionCategory& E) {
    const FusionRing& r = E.ring();
    const auto& objs = E.simples();
    IndexSet row, col;
    for (int i = 0; i < r.size(); ++i) {
        if (objs[i].label.m == 1) row.push_back(i);
        if (objs[i].label.n == 1) col.push_back(i);
    }
    std::vector<std::pair<std::string, IndexSet>> out;
    IndexSet c1 = ring_closure(r, row), c2 = ring_closure(r, col);
    out.emplace_back("C~1", c1);
    out.emplace_back("C~2", c2);
    IndexSet c3, c4;
    for (int i = 0; i < r.size(); ++i) {
        if (objs[i].kind != ExtObject::Kind::Split) continue;
        IndexSet s = ring_closure(r, {i});
        if (s.size() != 2) continue;
        if (objs[i].sign > 0 && c3.empty()) c3 = s;
        if (objs[i].sign < 0 && c4.empty()) c4 = s;
    }
    auto partner = [&](const IndexSet& s) { return is_subset(s, c1) ? c2 : c1; };
    if (!c3.empty()) out.emplace_back("C~3", c3);
    if (!c4.empty()) out.emplace_back("C~4", c4);
    if (!c3.empty()) out.emplace_back("C~5", ring_closure(r, set_union(c3, partner(c3))));
    if (!c4.empty()) out.emplace_back("C~6", ring_closure(r, set_union(c4, partner(c4))));
    return out;
}

std::vector<Subcategory> ext_enumerate_subcats(const ExtensionCategory& E) {
    if (!E.resolved()) throw InvariantError("extension ring at p=" + std::to_string(E.p()) + " is not uniquely resolved");
    const auto named = ext_named(E);
    std::vector<Subcategory> out;
    for (auto& s : enumerate_closed(E.ring())) {
        std::string name = "OTHER";
        if (static_cast<int>(s.size()) == E.ring().size()) name = "FULL";
        else if (s.size() == 1) name = "TRIVIAL";
        else
            for (const auto& [k, v] : named)
                if (v == s) {
                    name = k;
                    break;
                }
        out.push_back({std::move(s), name});
    }
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Modular: return "MODULAR";
        case Verdict::NotModular: return "NOT_MODULAR";
        default: return "INCONCLUSIVE";
    }
}

TwistVerdict ext_modularity_via_twist(const ExtensionCategory& E, const IndexSet& D) {
    TwistVerdict v;
    v.candidates = twist_candidates(E.ring(), E.theta(), D);
    for (int x : v.candidates)
        if (x != E.ring().unit()) {
            // balancing: the double braiding on each summand z of x*y is theta_z / theta_x theta_y
            v.witness = x;
            v.verdict = Verdict::NotModular;
            return v;
        }
    v.verdict = Verdict::Modular;
    return v;
}

namespace {

std::vector<std::string> decompose(const FusionRing& r, int a, int b) {
    std::vector<std::string> v;
    for (const auto& [c, k] : r.product(a, b)) v.insert(v.end(), k, r.name(c));
    std::sort(v.begin(), v.end());
    return v;
}

bool same(std::vector<std::string> a, std::vector<std::string> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

}  // namespace

std::vector<CheckLine> ext_verify(const ExtensionCategory& E) {
    std::vector<CheckLine> out;
    const FusionRing& r = E.ring();
    const int p = E.p();
    const bool one = p % 4 == 1;
    const int k = one ? (p - 1) / 4 : (p - 2) / 4;

    // object list as printed for p = 1 (4): N_{r,s}, r,s <= (p-1)/2, s odd; (r,(p+1)/2)^+-
    // and for p = 2 (4): N_{r,s}, s <= p/2, r < p/2 odd; (p/2,s)^+-
    std::vector<std::string> listed;
    if (one) {
        for (int a = 1; a <= (p - 1) / 2; ++a)
            for (int s = 1; s <= (p - 1) / 2; s += 2) listed.push_back("N" + KacLabel{a, s}.str());
        for (int a = 1; a <= (p - 1) / 2; ++a)
            for (const char* sg : {"+", "-"}) listed.push_back(KacLabel{a, (p + 1) / 2}.str() + sg);
    } else {
        for (int a = 1; a < p / 2; a += 2)
            for (int s = 1; s <= p / 2; ++s) listed.push_back("N" + KacLabel{a, s}.str());
        for (int s = 1; s <= p / 2; ++s)
            for (const char* sg : {"+", "-"}) listed.push_back(KacLabel{p / 2, s}.str() + sg);
    }
    out.push_back({"object list matches the sigma-orbit analysis", same(listed, r.simples())});

    bool twist_ok = true;
    for (const auto& o : E.simples())
        if (o.kind == ExtObject::Kind::Induced) {
            const auto& M = E.ambient().model;
            twist_ok = twist_ok && is_integer(conformal_weight(M, o.label) - conformal_weight(M, o.partner));
        }
    out.push_back({"twist constant on every induced orbit", twist_ok});

    RingCheck rc = check_ring(r);
    out.push_back({"ring is commutative, unital, rigid and associative", rc.ok()});

    bool book = true;
    for (int a = 0; a < r.size(); ++a)
        for (int b = 0; b < r.size(); ++b) {
            double s = 0;
            for (const auto& [c, m] : r.product(a, b)) s += m * E.simples()[c].qdim;
            double prod = E.simples()[a].qdim * E.simples()[b].qdim;
            if (std::abs(s - prod) > 1e-7 * std::max(1.0, prod)) book = false;
        }
    out.push_back({"dimension bookkeeping holds for every product", book});

    bool fp = true;
    for (int a = 0; a < r.size(); ++a)
        if (std::abs(E.dims()[a] - E.simples()[a].qdim) > 1e-9 * std::max(1.0, E.dims()[a])) fp = false;
    out.push_back({"FP dimensions equal the assigned quantum dimensions", fp});

    out.push_back({"split sign data unique up to relabeling", E.sign_solutions() == 1});
    out.push_back({"duality data unique", E.duality_solutions() == 1});

    const KacLabel F = one ? KacLabel{1, (p + 1) / 2} : KacLabel{p / 2, 1};
    const int fmax = one ? (p + 1) / 2 : p / 2;
    auto N = [&](int j) { return "N" + (one ? KacLabel{1, j} : KacLabel{j, 1}).str(); };
    auto series = [&](int start, int last) {
        std::vector<std::string> v;
        for (int j = start; j <= last; j += 4) v.push_back(N(j));
        return v;
    };
    const int fplus = r.index(F.str() + "+"), fminus = r.index(F.str() + "-");
    const bool odd = k % 2 == 1;
    out.push_back({"(" + F.str() + ")^+ dual is (" + F.str() + (odd ? ")^-" : ")^+"),
                   r.dual(fplus) == (odd ? fminus : fplus)});
    auto pp = series(odd ? 3 : 1, fmax - 4);
    pp.push_back(F.str() + (odd ? "-" : "+"));
    auto mm = series(odd ? 3 : 1, fmax - 4);
    mm.push_back(F.str() + (odd ? "+" : "-"));
    auto pm = series(odd ? 1 : 3, fmax - 2);
    out.push_back({"(" + F.str() + ")^+ x (" + F.str() + ")^+ rule", same(decompose(r, fplus, fplus), pp)});
    out.push_back({"(" + F.str() + ")^+ x (" + F.str() + ")^- rule", same(decompose(r, fplus, fminus), pm)});
    out.push_back({"(" + F.str() + ")^- x (" + F.str() + ")^- rule", same(decompose(r, fminus, fminus), mm)});
    if (p == 9) {
        out.push_back({"p=9: (1,5)^+ x (1,5)^+ = N11 + (1,5)^+", same(decompose(r, fplus, fplus), {"N1,1", "1,5+"})});
        out.push_back({"p=9: (1,5)^+ x (1,5)^- = N13", same(decompose(r, fplus, fminus), {"N1,3"})});
        out.push_back({"p=9: (1,5)^- x (1,5)^- = N11 + (1,5)^-", same(decompose(r, fminus, fminus), {"N1,1", "1,5-"})});
    }
    if (p == 6) out.push_back({"p=6: (3,1)^+ x (3,1)^- = N11", same(decompose(r, fplus, fminus), {"N1,1"})});

    double ext = 0;
    for (const auto& o : E.simples()) ext += o.qdim * o.qdim;
    const double amb = fpdim_closed_form(p, p + 1);
    out.push_back({"global dimension is a quarter of the ambient one", std::abs(ext - amb / 4) < 1e-7 * amb});
    return out;
}

}  // namespace virmtc
