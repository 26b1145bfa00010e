#pragma once

#include "virmtc/rational.hpp"

#include <complex>
#include <memory>
#include <utility>
#include <vector>

namespace virmtc {

/// Q(zeta_N) presented as Q[x]/Phi_N.  Shared, immutable, one per N.
class CyclotomicField {
public:
    static std::shared_ptr<const CyclotomicField> get(int N);

    int order() const { return n_; }
    int degree() const { return deg_; }
    const std::vector<Integer>& phi() const { return phi_; }

    /// x^j mod Phi_N, j taken mod N.
    const std::vector<long long>& power(long long j) const;

    /// Integer combination sum c_k zeta^k in the power basis.
    std::vector<long long> reduce(const std::vector<std::pair<long long, long long>>& terms) const;

    explicit CyclotomicField(int N);

private:
    int n_;
    int deg_;
    std::vector<Integer> phi_;
    std::vector<std::vector<long long>> pow_;
};

std::vector<Integer> cyclotomic_polynomial(int N);

class CycloNumber {
public:
    CycloNumber() : CycloNumber(1) {}
    explicit CycloNumber(int N);
    CycloNumber(int N, const Rational& r);

    static CycloNumber zeta(int N, long long k);
    static CycloNumber from_terms(int N, const std::vector<std::pair<long long, Rational>>& terms);
    static CycloNumber from_coeffs(int N, std::vector<Rational> coeffs);

    int modulus() const { return n_; }
    /// Power-basis coefficients, length phi(N).
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const;

    /// Same value viewed in Q(zeta_M); requires N | M.
    CycloNumber lift(int M) const;

    CycloNumber operator-() const;
    CycloNumber& operator+=(const CycloNumber& o);
    CycloNumber& operator-=(const CycloNumber& o);
    CycloNumber& operator*=(const CycloNumber& o);
    CycloNumber& operator*=(const Rational& r);
    friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
    friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
    friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
    friend CycloNumber operator*(CycloNumber a, const Rational& r) { return a *= r; }
    friend bool operator==(const CycloNumber& a, const CycloNumber& b);

    std::complex<double> eval() const;

private:
    int n_;
    std::shared_ptr<const CyclotomicField> field_;
    std::vector<Rational> c_;

    void unify(CycloNumber& o);
};

/// sin(a*pi/b) in Q(zeta_lcm(4,2b)).
CycloNumber make_sin(long long a, long long b);
bool cyclo_is_zero(const CycloNumber& x);
std::complex<double> float_eval(const CycloNumber& x);

}  // namespace virmtc
