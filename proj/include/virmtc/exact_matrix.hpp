#pragma once

#include "virmtc/cyclotomic.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace virmtc {

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols, int N);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    int modulus() const { return n_; }

    CycloNumber& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const CycloNumber& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    ExactMatrix transpose() const;
    ExactMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
    Eigen::MatrixXcd to_complex() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    int n_ = 1;
    std::vector<CycloNumber> e_;
};

// Rank over Q(zeta_N).  Reduces modulo primes l = 1 (mod N) under every
// embedding zeta -> w^k and stops once the product of the primes used exceeds
// the Hadamard bound on any minor one size above the rank seen so far.
std::size_t exact_rank(const ExactMatrix& m);

/// Singular values above `threshold` (scaled by max(1, sigma_max)).
std::size_t float_rank(const ExactMatrix& m, double threshold = 1e-8);
std::size_t float_rank(const Eigen::MatrixXcd& m, double threshold = 1e-8);

}  // namespace virmtc
