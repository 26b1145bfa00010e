#include "virmtc/exact_matrix.hpp"

#include "virmtc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

namespace virmtc {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, int N)
    : rows_(rows), cols_(cols), n_(N), e_(rows * cols, CycloNumber(N)) {}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_, n_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ExactMatrix ExactMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    ExactMatrix s(rows.size(), cols.size(), n_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s.at(i, j) = at(rows[i], cols[j]);
    return s;
}

Eigen::MatrixXcd ExactMatrix::to_complex() const {
    Eigen::MatrixXcd m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = at(i, j).eval();
    return m;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> f;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            f.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) f.push_back(n);
    return f;
}

// Primes l = 1 (mod N) just below 2^62, largest first.
class SplitPrimes {
public:
    explicit SplitPrimes(u64 N) : n_(N), t_(((u64(1) << 62) - 1) / N) {}
    u64 next() {
        while (t_ > 0) {
            u64 l = t_-- * n_ + 1;
            Integer z(std::to_string(l));
            if (mpz_probab_prime_p(z.get_mpz_t(), 30) > 0) return l;
        }
        throw InvariantError("ran out of split primes");
    }

private:
    u64 n_, t_;
};

u64 primitive_root_of_unity(u64 N, u64 l) {
    const auto fac = prime_factors(N);
    for (u64 g = 2;; ++g) {
        u64 w = powmod(g, (l - 1) / N, l);
        bool ok = w != 1 || N == 1;
        for (u64 r : fac)
            if (powmod(w, N / r, l) == 1) ok = false;
        if (ok || N == 1) return w;
    }
}

std::size_t rank_mod(std::vector<u64> a, std::size_t rows, std::size_t cols, u64 l) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
        u64 inv = powmod(a[r * cols + c], l - 2, l);
        for (std::size_t i = r + 1; i < rows; ++i) {
            u64 f = a[i * cols + c];
            if (f == 0) continue;
            f = mulmod(f, inv, l);
            for (std::size_t j = c; j < cols; ++j) {
                u64 s = mulmod(f, a[r * cols + j], l);
                u64& x = a[i * cols + j];
                x = x >= s ? x - s : x + l - s;
            }
        }
        ++r;
    }
    return r;
}

}  // namespace

std::size_t exact_rank(const ExactMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    if (R == 0 || C == 0) return 0;
    const int N = m.modulus();
    const std::size_t d = m.at(0, 0).coeffs().size();

    Integer den = 1;
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j)
            for (const auto& c : m.at(i, j).coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());

    std::vector<Integer> poly(R * C * d);
    Integer bound = 0;
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j) {
            Integer s = 0;
            const auto& cs = m.at(i, j).coeffs();
            for (std::size_t k = 0; k < d; ++k) {
                Rational v = cs[k] * den;
                Integer& z = poly[(i * C + j) * d + k];
                z = v.get_num();
                s += abs(z);
            }
            if (s > bound) bound = s;
        }
    if (bound == 0) return 0;
    const double log2B = std::log2(bound.get_d());

    std::vector<u64> units;
    for (int k = 1; k <= N; ++k)
        if (std::gcd(k, N) == 1) units.push_back(k);

    const std::size_t full = std::min(R, C);
    std::size_t best = 0;
    double bits = 0;
    SplitPrimes primes(N);
    std::vector<u64> red(R * C * d), a(R * C), wp(d);
    for (;;) {
        const u64 l = primes.next();
        for (std::size_t t = 0; t < red.size(); ++t) red[t] = mpz_fdiv_ui(poly[t].get_mpz_t(), l);
        const u64 w = primitive_root_of_unity(N, l);
        for (u64 k : units) {
            u64 x = powmod(w, k, l);
            wp[0] = 1;
            for (std::size_t e = 1; e < d; ++e) wp[e] = mulmod(wp[e - 1], x, l);
            for (std::size_t t = 0; t < R * C; ++t) {
                u64 acc = 0;
                for (std::size_t e = 0; e < d; ++e) {
                    if (red[t * d + e] == 0) continue;
                    acc += mulmod(red[t * d + e], wp[e], l);
                    if (acc >= l) acc -= l;
                }
                a[t] = acc;
            }
            best = std::max(best, rank_mod(a, R, C, l));
            if (best == full) return best;
        }
        bits += std::log2(static_cast<double>(l));
        const double r1 = static_cast<double>(best + 1);
        const double need = r1 * (log2B + 0.5 * std::log2(r1)) + 1.0;
        if (bits > need) return best;
    }
}

std::size_t float_rank(const Eigen::MatrixXcd& m, double threshold) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& s = svd.singularValues();
    const double cut = threshold * std::max(1.0, s.size() ? s(0) : 0.0);
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > cut) ++r;
    return r;
}

std::size_t float_rank(const ExactMatrix& m, double threshold) { return float_rank(m.to_complex(), threshold); }

}  // namespace virmtc
