#ifndef P1CERT_POLYBOUND_SUP_BOUND_HPP
#define P1CERT_POLYBOUND_SUP_BOUND_HPP

#include <array>
#include <optional>
#include <vector>

#include "p1cert/polybound/partition.hpp"
#include "p1cert/polybound/poly.hpp"

namespace p1cert::polybound {

// Width to which derivative roots of the cubic head are bisected.
Rational critical_point_tolerance();

// Upper bound of max |a0 + a1 u + a2 u^2 + a3 u^3| over u in [-h, h].
Rational cubic_head_max(const std::array<Rational, 4>& a, const Rational& h);

struct PieceBound {
  Rational lo, hi;  // subinterval in t
  Rational head;    // bound on the cubic head
  Rational tail;    // l1 bound on degrees >= 4
  Rational bound() const { return head + tail; }
};

struct SupBoundResult {
  Rational bound;
  std::vector<PieceBound> pieces;
};

SupBoundResult sup_bound_detail(const Poly& p, const PartitionPlan& plan);
// U >= max |p(t)| for t in [plan.front(), plan.back()].
Rational sup_bound(const Poly& p, const PartitionPlan& plan);

// Bisects only the pieces whose bound is not below target, up to max_depth
// levels. Never used implicitly: callers opt in.
struct RefinedBound {
  Rational bound;
  PartitionPlan plan;
  bool reached = false;
};
RefinedBound refine_until(const Poly& p, const PartitionPlan& plan, const Rational& target, int max_depth = 12);

enum class Certification { certified, not_certified, indeterminate };
const char* to_string(Certification c);

struct RationalBound {
  Certification status = Certification::indeterminate;
  Rational num_bound;
  Rational den_lower;  // 1 - sup |den - 1|
  std::optional<Rational> ratio_bound;  // num_bound / den_lower when den_lower > 0
};

// Certifies |num/den| < eps on the plan's interval via
// sup|num| < eps * (1 - sup|den - 1|). den_plan, if given, is used for the
// denominator bound instead of plan.
RationalBound rational_sup_bound(const Poly& num, const Poly& den, const PartitionPlan& plan, const Rational& eps,
                                 const PartitionPlan* den_plan = nullptr);

}  // namespace p1cert::polybound

#endif
