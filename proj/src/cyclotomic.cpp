#include "virmtc/cyclotomic.hpp"

#include "virmtc/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

namespace virmtc {

namespace {

long long mod_n(long long k, long long n) {
    k %= n;
    return k < 0 ? k + n : k;
}

// Exact division of integer polynomials (low-to-high), divisor monic.
std::vector<Integer> poly_div(std::vector<Integer> a, const std::vector<Integer>& b) {
    const std::size_t db = b.size() - 1;
    std::vector<Integer> q(a.size() - db);
    for (std::size_t i = a.size(); i-- > db;) {
        Integer c = a[i];
        q[i - db] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    for (std::size_t i = 0; i < db; ++i)
        if (a[i] != 0) throw InvariantError("cyclotomic division left a remainder");
    return q;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(int N) {
    static std::mutex mu;
    static std::map<int, std::vector<Integer>> memo;
    if (N < 1) throw ValidationError("cyclotomic order must be positive");
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = memo.find(N);
        if (it != memo.end()) return it->second;
    }
    std::vector<Integer> f(N + 1);
    f[0] = -1;
    f[N] = 1;
    for (int d = 1; d < N; ++d)
        if (N % d == 0) f = poly_div(f, cyclotomic_polynomial(d));
    std::lock_guard<std::mutex> lk(mu);
    memo.emplace(N, f);
    return f;
}

CyclotomicField::CyclotomicField(int N) : n_(N), phi_(cyclotomic_polynomial(N)) {
    deg_ = static_cast<int>(phi_.size()) - 1;
    std::vector<long long> ph(deg_);
    for (int i = 0; i < deg_; ++i) {
        if (!phi_[i].fits_slong_p()) throw InvariantError("cyclotomic coefficient overflow");
        ph[i] = phi_[i].get_si();
    }
    pow_.assign(N, std::vector<long long>(deg_, 0));
    pow_[0][0] = 1;
    if (deg_ == 0) return;
    for (int j = 1; j < N; ++j) {
        const auto& prev = pow_[j - 1];
        auto& cur = pow_[j];
        long long top = prev[deg_ - 1];
        for (int i = deg_ - 1; i > 0; --i) cur[i] = prev[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (int i = 0; i < deg_; ++i) {
                long long t;
                if (__builtin_mul_overflow(top, ph[i], &t) || __builtin_sub_overflow(cur[i], t, &cur[i]))
                    throw InvariantError("power table overflow");
            }
    }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(int N) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
    if (N < 1) throw ValidationError("cyclotomic order must be positive");
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(N);
        if (it != cache.end()) return it->second;
    }
    auto f = std::make_shared<const CyclotomicField>(N);
    std::lock_guard<std::mutex> lk(mu);
    return cache.emplace(N, f).first->second;
}

const std::vector<long long>& CyclotomicField::power(long long j) const {
    return pow_[mod_n(j, n_)];
}

std::vector<long long> CyclotomicField::reduce(
    const std::vector<std::pair<long long, long long>>& terms) const {
    std::vector<long long> out(deg_, 0);
    for (auto [k, c] : terms) {
        if (c == 0) continue;
        const auto& v = power(k);
        for (int i = 0; i < deg_; ++i) out[i] += c * v[i];
    }
    return out;
}

CycloNumber::CycloNumber(int N)
    : n_(N), field_(CyclotomicField::get(N)), c_(field_->degree()) {}

CycloNumber::CycloNumber(int N, const Rational& r) : CycloNumber(N) {
    if (!c_.empty()) {
        c_[0] = r;
        c_[0].canonicalize();
    }
}

CycloNumber CycloNumber::zeta(int N, long long k) {
    return from_terms(N, {{k, Rational(1)}});
}

CycloNumber CycloNumber::from_terms(int N, const std::vector<std::pair<long long, Rational>>& terms) {
    CycloNumber x(N);
    const int d = x.field_->degree();
    for (const auto& [k, raw] : terms) {
        Rational c = raw;
        c.canonicalize();
        if (c == 0) continue;
        const auto& v = x.field_->power(k);
        for (int i = 0; i < d; ++i)
            if (v[i] != 0) x.c_[i] += c * static_cast<long>(v[i]);
    }
    return x;
}

CycloNumber CycloNumber::from_coeffs(int N, std::vector<Rational> coeffs) {
    CycloNumber x(N);
    std::vector<std::pair<long long, Rational>> terms;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0) terms.emplace_back(static_cast<long long>(k), std::move(coeffs[k]));
    return from_terms(N, terms);
}

bool CycloNumber::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

CycloNumber CycloNumber::lift(int M) const {
    if (M == n_) return *this;
    if (M % n_ != 0) throw ValidationError("cannot lift Q(zeta_" + std::to_string(n_) + ") into Q(zeta_" + std::to_string(M) + ")");
    const long long s = M / n_;
    std::vector<std::pair<long long, Rational>> terms;
    for (std::size_t j = 0; j < c_.size(); ++j)
        if (c_[j] != 0) terms.emplace_back(static_cast<long long>(j) * s, c_[j]);
    return from_terms(M, terms);
}

void CycloNumber::unify(CycloNumber& o) {
    if (o.n_ == n_) return;
    int m = std::lcm(n_, o.n_);
    *this = lift(m);
    o = o.lift(m);
}

CycloNumber CycloNumber::operator-() const {
    CycloNumber r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
    CycloNumber b = o;
    unify(b);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
    return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) {
    CycloNumber b = o;
    unify(b);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
    return *this;
}

CycloNumber& CycloNumber::operator*=(const Rational& r) {
    for (auto& c : c_) c *= r;
    return *this;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
    CycloNumber b = o;
    unify(b);
    const std::size_t d = c_.size();
    if (d == 0) return *this;
    std::vector<Rational> full(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
            if (b.c_[j] != 0) full[i + j] += c_[i] * b.c_[j];
    }
    std::vector<Rational> out(full.begin(), full.begin() + d);
    for (std::size_t k = d; k < full.size(); ++k) {
        if (full[k] == 0) continue;
        const auto& v = field_->power(static_cast<long long>(k));
        for (std::size_t i = 0; i < d; ++i)
            if (v[i] != 0) out[i] += full[k] * static_cast<long>(v[i]);
    }
    c_ = std::move(out);
    return *this;
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
    if (a.n_ == b.n_) return a.c_ == b.c_;
    return (a - b).is_zero();
}

std::complex<double> CycloNumber::eval() const {
    const long double tau = 2.0L * 3.14159265358979323846264338327950288L;
    long double re = 0, im = 0;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        const long double c = static_cast<long double>(c_[j].get_num().get_d()) /
                              static_cast<long double>(c_[j].get_den().get_d());
        long double ang = tau * static_cast<long double>(j) / n_;
        re += c * cosl(ang);
        im += c * sinl(ang);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

CycloNumber make_sin(long long a, long long b) {
    if (b < 1) throw ValidationError("make_sin needs a positive denominator");
    const long long N = std::lcm(4LL, 2 * b);
    const long long u = mod_n(a * (N / (2 * b)), N);
    const long long quarter = N / 4;
    return CycloNumber::from_terms(static_cast<int>(N),
                                   {{u + quarter, Rational(-1, 2)}, {quarter - u, Rational(1, 2)}});
}

bool cyclo_is_zero(const CycloNumber& x) { return x.is_zero(); }

std::complex<double> float_eval(const CycloNumber& x) { return x.eval(); }

}  // namespace virmtc
