#pragma once

#include "virmtc/fusion.hpp"
#include "virmtc/modular_data.hpp"
#include "virmtc/subcat.hpp"

#include <Eigen/Dense>

#include <memory>
#include <string>
#include <vector>

namespace virmtc {

struct ExtObject {
    enum class Kind { Induced, Split };
    Kind kind = Kind::Induced;
    KacLabel label;    // orbit representative, or the fixed label
    KacLabel partner;  // sigma(label); equals label for split objects
    int sign = 0;      // +1 / -1 for split objects
    Rational h_mod1;
    double qdim = 0;

    /// "N1,1", "1,5+", "1,5-"
    std::string id() const;
};

/// What Frobenius reciprocity alone says about a x b.
struct BaseProduct {
    std::vector<Term> known;                        // fully determined targets
    std::vector<std::pair<KacLabel, int>> pending;  // split pair G^+ + G^- with this total
    bool partner_sum = false;                       // split x split: totals are for a x (b + b^-)
    bool ambiguous() const { return !pending.empty(); }
};

/// Local modules of (1,1)+(1,p) over C_{p,p+1}, p = 1,2 mod 4, p >= 5.
class ExtensionCategory {
public:
    explicit ExtensionCategory(int p);

    int p() const { return p_; }
    const MinimalCategory& ambient() const { return *amb_; }
    const std::vector<ExtObject>& simples() const { return objs_; }
    const FusionRing& ring() const { return ring_; }
    const std::vector<double>& dims() const { return dims_; }
    const std::vector<Rational>& theta() const { return theta_; }
    int index(const std::string& id) const { return ring_.index(id); }

    bool resolved() const { return resolved_; }
    int sign_solutions() const { return sign_solutions_; }
    int duality_solutions() const { return duality_solutions_; }
    /// +1: F^+ self-dual, -1: (F^+)* = F^-.
    const std::vector<int>& duality() const { return tau_; }
    const std::vector<std::string>& ambiguity_log() const { return log_; }

    BaseProduct base_product(int a, int b) const;

private:
    int p_;
    std::shared_ptr<MinimalCategory> amb_;
    std::vector<int> local_, fixed_, sigma_, fixed_pos_, orbit_obj_;
    std::vector<ExtObject> objs_;
    std::vector<Eigen::MatrixXi> rho_;
    std::vector<int> tau_;
    FusionRing ring_;
    std::vector<double> dims_;
    std::vector<Rational> theta_;
    std::vector<std::string> log_;
    bool resolved_ = false;
    int sign_solutions_ = 0, duality_solutions_ = 0;

    Eigen::MatrixXi support(int w) const;
    void solve_signs();
    bool table(const std::vector<int>& tau, std::vector<int>& out, bool log);
};

std::vector<ExtObject> ext_simples(int p);

std::vector<Subcategory> ext_enumerate_subcats(const ExtensionCategory& E);
/// C~1 .. C~6 where they exist.
std::vector<std::pair<std::string, IndexSet>> ext_named(const ExtensionCategory& E);

enum class Verdict { Modular, NotModular, Inconclusive };
std::string to_string(Verdict v);

struct TwistVerdict {
    Verdict verdict = Verdict::Inconclusive;
    IndexSet candidates;
    int witness = -1;
};

TwistVerdict ext_modularity_via_twist(const ExtensionCategory& E, const IndexSet& D);

struct CheckLine {
    std::string name;
    bool pass;
};
/// Replays the anchored fusion rules and structural checks.
std::vector<CheckLine> ext_verify(const ExtensionCategory& E);

}  // namespace virmtc
