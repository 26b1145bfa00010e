#pragma once

#include "virmtc/minimal_model.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <utility>
#include <vector>

namespace virmtc {

using Term = std::pair<int, int>;  // (target index, multiplicity)

/// Commutative fusion ring; coefficients stored once per unordered pair.
class FusionRing {
public:
    FusionRing() = default;
    FusionRing(std::vector<std::string> simples, int unit);

    int size() const { return static_cast<int>(names_.size()); }
    int unit() const { return unit_; }
    const std::vector<std::string>& simples() const { return names_; }
    const std::string& name(int a) const { return names_[a]; }
    int index(const std::string& id) const;

    /// Adds to N_{ab}^c (and hence N_{ba}^c).
    void add(int a, int b, int c, int mult);
    /// Sorts terms and derives duals; call once all coefficients are in.
    void finalize();

    int coeff(int a, int b, int c) const;
    /// Decomposition of a x b, sorted by target.
    const std::vector<Term>& product(int a, int b) const { return prod_[key(a, b)]; }
    int dual(int a) const { return dual_[a]; }
    /// (N_a)_{bc} = N_{ab}^c
    std::vector<std::vector<int>> matrix(int a) const;

    friend bool operator==(const FusionRing& x, const FusionRing& y) {
        return x.names_ == y.names_ && x.unit_ == y.unit_ && x.prod_ == y.prod_;
    }

private:
    std::size_t key(int a, int b) const {
        if (a > b) std::swap(a, b);
        return static_cast<std::size_t>(a) * names_.size() + static_cast<std::size_t>(b);
    }

    std::vector<std::string> names_;
    int unit_ = 0;
    std::vector<std::vector<Term>> prod_;
    std::vector<int> dual_;
};

struct RingCheck {
    bool commutative = true;
    bool unit = true;
    bool duality = true;
    bool associative = true;
    bool ok() const { return commutative && unit && duality && associative; }
};

/// Exhaustive check of the four ring axioms.
RingCheck check_ring(const FusionRing& r);

/// Admissible-interval coefficient on canonical labels.
int fusion_coeff(const MinimalModel& M, KacLabel a, KacLabel b, KacLabel c);
/// a x b as a sorted multiset of canonical labels.
std::vector<KacLabel> fuse(const MinimalModel& M, KacLabel a, KacLabel b);
FusionRing minimal_fusion_ring(const MinimalModel& M);

/// Perron-Frobenius eigenvalue of N_a by shifted power iteration.
double fpdim_object(const FusionRing& r, int a);
std::vector<double> fpdims(const FusionRing& r);
double fpdim_category(const FusionRing& r);
double fpdim_of(const std::vector<double>& d, const std::vector<int>& members);
/// pq / (8 sin^2(pi/p) sin^2(pi/q))
double fpdim_closed_form(int p, int q);

void to_json(nlohmann::json& j, const FusionRing& r);
void from_json(const nlohmann::json& j, FusionRing& r);

}  // namespace virmtc
