#pragma once

#include "virmtc/subcat.hpp"

#include <string>
#include <utility>
#include <vector>

namespace virmtc {

/// (left simple, right simple) pairs in ambient indices, unit first.
using Bijection = std::vector<std::pair<int, int>>;

/// Unit-preserving bijections L -> R with equal fusion coefficients and
/// matching FP dimensions (|d_a - d_F(a)| < 1e-6).  Empty if the ranks differ.
std::vector<Bijection> fusion_ring_isos(const FusionRing& lr, const std::vector<double>& ld, const IndexSet& L,
                                        const FusionRing& rr, const std::vector<double>& rd, const IndexSet& R);

/// All |L|^3 coefficient equalities, checked independently of the search.
bool verify_iso(const FusionRing& lr, const FusionRing& rr, const Bijection& f);

struct GluingCandidate {
    std::string left, right;  // "(4,5).C2"
    Bijection bijection;
    std::vector<std::pair<KacLabel, KacLabel>> labels;
    std::vector<Rational> weight_sums;
    bool integral = false;
    /// theta_X theta_F(X) == 1 exactly, as roots of unity
    bool twist_inverse = false;
};

GluingCandidate make_candidate(const MinimalCategory& A, const Subcategory& D, const MinimalCategory& B,
                               const Subcategory& E, const Bijection& f);

std::vector<GluingCandidate> gluing_candidates(const MinimalCategory& A, const Subcategory& D,
                                               const MinimalCategory& B, const Subcategory& E);

/// Looks up C1..C6 by pattern; ValidationError on unknown names.
Subcategory named_subcategory(const MinimalCategory& C, const std::string& name);

struct ChainRow {
    int n = 0;
    std::string left, right;
    int isos = 0;
    bool integral = false;  // some candidate passes
    std::vector<Rational> weight_sums;  // of the first candidate
    bool left_modular = false, right_modular = false;
};

/// (C2 of C_{n+1,n+2}, C4 of C_{n+2,n+3}) for n = 3..nmax.
std::vector<ChainRow> scan_unitary_chain(int nmax);

}  // namespace virmtc
