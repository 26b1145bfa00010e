#include "virmtc/minimal_model.hpp"

#include "virmtc/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace virmtc {

std::string KacLabel::str() const { return std::to_string(m) + "," + std::to_string(n); }

KacLabel KacLabel::parse(const std::string& s) {
    KacLabel x;
    char comma = 0;
    std::istringstream in(s);
    if (!(in >> x.m >> comma >> x.n) || comma != ',' || !(in >> std::ws).eof())
        throw ValidationError("bad Kac label '" + s + "', expected \"m,n\"");
    return x;
}

MinimalModel::MinimalModel(int p, int q) {
    if (p > q) std::swap(p, q);
    if (p < 2) throw ValidationError("need p,q >= 2 (got " + std::to_string(p) + ")");
    if (std::gcd(p, q) != 1)
        throw ValidationError("p and q must be coprime (gcd(" + std::to_string(p) + "," + std::to_string(q) + ") = " +
                              std::to_string(std::gcd(p, q)) + ")");
    p_ = p;
    q_ = q;
    field_order_ = std::lcm(4, std::lcm(2 * p, 2 * q));
    for (int m = 1; m < p; ++m)
        for (int n = 1; n < q; ++n) {
            KacLabel x{m, n};
            if (canonical(x) == x) simples_.push_back(x);
        }
}

KacLabel MinimalModel::canonical(KacLabel x) const {
    if (!in_rectangle(x))
        throw ValidationError("label (" + x.str() + ") outside the Kac table of (" + std::to_string(p_) + "," +
                              std::to_string(q_) + ")");
    return std::min(x, KacLabel{p_ - x.m, q_ - x.n});
}

int MinimalModel::index_of(KacLabel x) const {
    auto c = canonical(x);
    auto it = std::lower_bound(simples_.begin(), simples_.end(), c);
    return static_cast<int>(it - simples_.begin());
}

Rational central_charge(const MinimalModel& M) {
    const long p = M.p(), q = M.q();
    Rational c = 1 - Rational(6 * (p - q) * (p - q), p * q);
    c.canonicalize();
    return c;
}

Rational conformal_weight(const MinimalModel& M, KacLabel x) {
    M.canonical(x);
    const long p = M.p(), q = M.q();
    const long a = x.m * q - x.n * p;
    Rational h(a * a - (p - q) * (p - q), 4 * p * q);
    h.canonicalize();
    return h;
}

CycloNumber twist(const MinimalModel& M, KacLabel x) {
    Rational t = frac_part(conformal_weight(M, x));
    const int D = static_cast<int>(t.get_den().get_si());
    return CycloNumber::zeta(D, t.get_num().get_si());
}

KacLabel simple_current_act(const MinimalModel& M, KacLabel x) {
    x = M.canonical(x);
    return M.canonical({x.m, M.q() - x.n});
}

std::vector<KacLabel> list_simples(const MinimalModel& M) { return M.simples(); }

}  // namespace virmtc
