#pragma once

#include "virmtc/cyclotomic.hpp"
#include "virmtc/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace virmtc {

struct KacLabel {
    int m = 1;
    int n = 1;

    auto operator<=>(const KacLabel&) const = default;
    /// "m,n"
    std::string str() const;
    static KacLabel parse(const std::string& s);
};

class MinimalModel {
public:
    /// Swaps so that p < q; throws ValidationError unless p,q >= 2 and coprime.
    MinimalModel(int p, int q);

    int p() const { return p_; }
    int q() const { return q_; }
    int rank() const { return static_cast<int>(simples_.size()); }
    /// lcm(4, 2p, 2q): every S entry lives in Q(zeta_N).
    int field_order() const { return field_order_; }

    bool in_rectangle(KacLabel x) const { return x.m >= 1 && x.m < p_ && x.n >= 1 && x.n < q_; }
    KacLabel canonical(KacLabel x) const;
    const std::vector<KacLabel>& simples() const { return simples_; }
    int index_of(KacLabel x) const;
    KacLabel simple_current() const { return canonical({1, q_ - 1}); }

    friend bool operator==(const MinimalModel& a, const MinimalModel& b) { return a.p_ == b.p_ && a.q_ == b.q_; }

private:
    int p_, q_, field_order_;
    std::vector<KacLabel> simples_;
};

Rational central_charge(const MinimalModel& M);
/// ((mq - np)^2 - (p - q)^2) / 4pq
Rational conformal_weight(const MinimalModel& M, KacLabel x);
/// exp(2 pi i h) as an exact root of unity.
CycloNumber twist(const MinimalModel& M, KacLabel x);
KacLabel simple_current_act(const MinimalModel& M, KacLabel x);
std::vector<KacLabel> list_simples(const MinimalModel& M);

}  // namespace virmtc
