#pragma once

#include "virmtc/exact_matrix.hpp"
#include "virmtc/fusion.hpp"
#include "virmtc/minimal_model.hpp"

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <vector>

namespace virmtc {

/// A Laurent combination sum c_k zeta_N^k with integer coefficients.
using GroupRingTerms = std::vector<std::pair<long long, long long>>;

class ModularData {
public:
    /// `s_float` may be supplied from a cache; it must equal what would be computed.
    explicit ModularData(const MinimalModel& M, std::optional<Eigen::MatrixXd> s_float = std::nullopt);

    const MinimalModel& model() const { return model_; }
    int rank() const { return model_.rank(); }

    /// 4 x kernel entry (sign and two sines, scalar sqrt(8/pq) dropped) as four zeta terms.
    GroupRingTerms s_terms(int a, int b) const;
    CycloNumber s_entry(int a, int b) const;
    ExactMatrix s_kernel() const;
    ExactMatrix s_kernel(const std::vector<int>& members) const;

    /// The kernel times sqrt(8/pq), no sign normalization; S_00 < 0 happens for some non-unitary models.
    const Eigen::MatrixXd& s_float() const { return s_; }
    /// S_ax / S_0x along the column x whose ratios are all positive (x = unit when q = p + 1).
    double qdim(int a) const { return s_(a, pf_) / s_(0, pf_); }
    int pf_column() const { return pf_; }

    const Rational& weight(int a) const { return h_[a]; }
    /// h mod 1
    const Rational& theta_exponent(int a) const { return theta_[a]; }
    std::complex<double> t_entry(int a) const;

    /// Exact test S_xy S_00 == S_0x S_0y.
    bool s_centralizes(int x, int y) const;

    /// Float Verlinde number; throws InvariantError if not within 1e-6 of an integer.
    int verlinde(int a, int b, int c) const;
    double verlinde_raw(int a, int b, int c) const;

    int fsexp(const std::vector<int>& members) const;

private:
    MinimalModel model_;
    Eigen::MatrixXd s_;
    int pf_ = 0;
    std::vector<Rational> h_, theta_;
};

Eigen::MatrixXd compute_s_float(const MinimalModel& M);

/// Ambient category bundle: model, fusion ring, modular data, FP dimensions.
struct MinimalCategory {
    MinimalModel model;
    FusionRing ring;
    ModularData data;
    std::vector<double> dims;

    MinimalCategory(int p, int q);
    MinimalCategory(const MinimalModel& M, FusionRing r, std::optional<Eigen::MatrixXd> s_float);

    std::vector<int> all() const;
    int index(const std::string& label) const { return model.index_of(KacLabel::parse(label)); }
};

}  // namespace virmtc
