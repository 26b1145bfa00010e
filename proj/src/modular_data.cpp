#include "virmtc/modular_data.hpp"

#include "virmtc/errors.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace virmtc {

namespace {

long long mod_n(long long k, long long n) {
    k %= n;
    return k < 0 ? k + n : k;
}

int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

Eigen::MatrixXd compute_s_float(const MinimalModel& M) {
    const int r = M.rank();
    const int p = M.p(), q = M.q();
    const auto& L = M.simples();
    const double pi = std::numbers::pi;
    const double pre = std::sqrt(8.0 / (p * q));
    Eigen::MatrixXd S(r, r);
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
            const long m = L[a].m, n = L[a].n, m2 = L[b].m, n2 = L[b].n;
            // reduce the sine arguments mod 2pi before evaluating
            if ((q * m * m2) % p == 0 || (p * n * n2) % q == 0) {
                S(a, b) = 0;
                continue;
            }
            const double s1 = std::sin(pi * static_cast<double>(mod_n(q * m * m2, 2 * p)) / p);
            const double s2 = std::sin(pi * static_cast<double>(mod_n(p * n * n2, 2 * q)) / q);
            S(a, b) = pre * parity_sign(1 + m * n2 + n * m2) * s1 * s2;
        }
    return S;
}

ModularData::ModularData(const MinimalModel& M, std::optional<Eigen::MatrixXd> s_float)
    : model_(M), s_(s_float ? std::move(*s_float) : compute_s_float(M)) {
    if (s_.rows() != M.rank() || s_.cols() != M.rank()) throw ValidationError("cached S-matrix has the wrong shape");
    for (const auto& x : M.simples()) {
        h_.push_back(conformal_weight(M, x));
        theta_.push_back(frac_part(h_.back()));
    }
    pf_ = -1;
    for (int x = 0; x < M.rank() && pf_ < 0; ++x) {
        bool same = true;
        for (int a = 0; a < M.rank(); ++a) same = same && s_(a, x) * s_(0, x) > 0;
        if (same) pf_ = x;
    }
    if (pf_ < 0) throw InvariantError("no S column with one-signed ratios");
}

GroupRingTerms ModularData::s_terms(int a, int b) const {
    const auto& L = model_.simples();
    const long long p = model_.p(), q = model_.q(), N = model_.field_order();
    const long long m = L[a].m, n = L[a].n, m2 = L[b].m, n2 = L[b].n;
    // sin(x pi / y) = (-1/2) zeta^{N/4} (zeta^u - zeta^-u), u = x N / 2y
    const long long u = mod_n(q * m * m2 * (N / (2 * p)), N);
    const long long v = mod_n(p * n * n2 * (N / (2 * q)), N);
    // product of the two sines = (-1/4)(z^{u+v} - z^{u-v} - z^{v-u} + z^{-u-v}); fold the sign in
    const long long s = -parity_sign(1 + m * n2 + n * m2);
    return {{u + v, s}, {u - v, -s}, {v - u, -s}, {-u - v, s}};
}

CycloNumber ModularData::s_entry(int a, int b) const {
    std::vector<std::pair<long long, Rational>> t;
    for (auto [k, c] : s_terms(a, b)) t.emplace_back(k, Rational(static_cast<long>(c), 4L));
    return CycloNumber::from_terms(model_.field_order(), t);
}

ExactMatrix ModularData::s_kernel(const std::vector<int>& members) const {
    ExactMatrix K(members.size(), members.size(), model_.field_order());
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i; j < members.size(); ++j) {
            K.at(i, j) = s_entry(members[i], members[j]);
            K.at(j, i) = K.at(i, j);
        }
    return K;
}

ExactMatrix ModularData::s_kernel() const {
    std::vector<int> all(rank());
    std::iota(all.begin(), all.end(), 0);
    return s_kernel(all);
}

std::complex<double> ModularData::t_entry(int a) const {
    Rational e = frac_part(h_[a] - central_charge(model_) / 24);
    return std::polar(1.0, 2 * std::numbers::pi * e.get_d());
}

bool ModularData::s_centralizes(int x, int y) const {
    auto field = CyclotomicField::get(model_.field_order());
    GroupRingTerms terms;
    auto mul = [&](const GroupRingTerms& A, const GroupRingTerms& B, long long sign) {
        for (auto [i, c] : A)
            for (auto [j, d] : B) terms.emplace_back(i + j, sign * c * d);
    };
    mul(s_terms(x, y), s_terms(0, 0), 1);
    mul(s_terms(0, x), s_terms(0, y), -1);
    for (long long c : field->reduce(terms))
        if (c != 0) return false;
    return true;
}

double ModularData::verlinde_raw(int a, int b, int c) const {
    long double s = 0;
    for (int x = 0; x < rank(); ++x)
        s += static_cast<long double>(s_(a, x)) * s_(b, x) * s_(c, x) / s_(0, x);
    return static_cast<double>(s);
}

int ModularData::verlinde(int a, int b, int c) const {
    const double v = verlinde_raw(a, b, c);
    const double r = std::round(v);
    if (std::abs(v - r) >= 1e-6)
        throw InvariantError("Verlinde sum " + std::to_string(v) + " is not near an integer");
    return static_cast<int>(r);
}

int ModularData::fsexp(const std::vector<int>& members) const {
    long long l = 1;
    for (int a : members) l = std::lcm(l, theta_[a].get_den().get_si());
    return static_cast<int>(l);
}

MinimalCategory::MinimalCategory(int p, int q)
    : MinimalCategory(MinimalModel(p, q), minimal_fusion_ring(MinimalModel(p, q)), std::nullopt) {}

MinimalCategory::MinimalCategory(const MinimalModel& M, FusionRing r, std::optional<Eigen::MatrixXd> s_float)
    : model(M), ring(std::move(r)), data(M, std::move(s_float)) {
    if (ring.size() != M.rank()) throw ValidationError("fusion ring does not match the model");
    dims = fpdims(ring);
}

std::vector<int> MinimalCategory::all() const {
    std::vector<int> v(model.rank());
    std::iota(v.begin(), v.end(), 0);
    return v;
}

}  // namespace virmtc
