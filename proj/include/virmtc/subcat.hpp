#pragma once

#include "virmtc/fusion.hpp"
#include "virmtc/modular_data.hpp"

#include <map>
#include <string>
#include <vector>

namespace virmtc {

/// Sorted simple indices.
using IndexSet = std::vector<int>;

// Ring-level machinery, shared with the extension category.
bool is_fusion_closed(const FusionRing& r, const IndexSet& s);
IndexSet ring_closure(const FusionRing& r, IndexSet seed);
IndexSet set_union(const IndexSet& a, const IndexSet& b);
bool is_subset(const IndexSet& a, const IndexSet& b);
/// All fusion-closed subsets containing the unit: cyclic closures joined to a fixpoint.
std::vector<IndexSet> enumerate_closed(const FusionRing& r);
/// Reference enumeration over all 2^(n-1) subsets; refuses n > 20.
std::vector<IndexSet> brute_force_closed(const FusionRing& r);
/// {x in D : for all y in D and z in x*y, theta_z = theta_x theta_y}
IndexSet twist_candidates(const FusionRing& r, const std::vector<Rational>& theta, const IndexSet& D);

struct Subcategory {
    IndexSet members;
    std::string name;
};

struct CenterReport {
    IndexSet center;             // exact S-criterion
    IndexSet twist_candidates;   // balancing-identity candidates
    bool trivial() const { return center.size() == 1; }
};

struct ModularityReport {
    bool modular = false;
    std::size_t rank_exact = 0;
    std::size_t rank_float = 0;
    CenterReport center;
};

struct DeligneReport {
    bool centralizer = false;
    bool bijection = false;
    bool fusion = false;
    bool fpdim = false;
    bool ok() const { return centralizer && bijection && fusion && fpdim; }
};

Subcategory closure(const MinimalCategory& C, const std::vector<KacLabel>& seed);
/// C1..C6 as they are defined, even where two of them coincide.
std::map<std::string, IndexSet> named_patterns(const MinimalCategory& C);
std::string classify_named(const MinimalCategory& C, const IndexSet& D);
/// Every closed subset including TRIVIAL and FULL, ordered by size then members.
std::vector<Subcategory> enumerate_subcats(const MinimalCategory& C);
std::vector<Subcategory> nontrivial(const std::vector<Subcategory>& all, int rank);

IndexSet centralizer(const MinimalCategory& C, const IndexSet& D, const IndexSet& ambient);
CenterReport mueger_center(const MinimalCategory& C, const IndexSet& D);
/// Exact rank of S|D; throws InvariantError if it disagrees with the center verdict.
ModularityReport is_modular(const MinimalCategory& C, const IndexSet& D, double float_threshold = 1e-8);
/// Trivial counts as prime.
bool is_prime(const MinimalCategory& C, const IndexSet& D);

/// Checks (b)-(d) of a Deligne factorization on ring data alone.
DeligneReport ring_deligne_check(const FusionRing& r, const std::vector<double>& dims, const IndexSet& D,
                                 const IndexSet& E, const IndexSet& ambient);
DeligneReport deligne_factor_check(const MinimalCategory& C, const IndexSet& D, const IndexSet& E);
DeligneReport deligne_factor_check(const MinimalCategory& C, const IndexSet& D, const IndexSet& E,
                                   const IndexSet& ambient);

std::vector<std::string> labels_of(const MinimalCategory& C, const IndexSet& s);

}  // namespace virmtc
