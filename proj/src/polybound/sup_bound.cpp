#include "p1cert/polybound/sup_bound.hpp"

#include <functional>

namespace p1cert::polybound {

Rational critical_point_tolerance() { return Rational(1, 1000000); }

namespace {

struct Cubic {
  std::array<Rational, 4> a;
  Rational value(const Rational& u) const { return ((a[3] * u + a[2]) * u + a[1]) * u + a[0]; }
  Rational slope(const Rational& u) const { return (Rational(3) * a[3] * u + Rational(2) * a[2]) * u + a[1]; }
};

// On [l, r] the slope is monotone. If it changes sign, bracket the root to
// the tolerance and bound |value| there by the mean-value form
// |f(m)| + max(|f'(l)|, |f'(r)|) * (r - l)/2.
std::optional<Rational> critical_piece(const Cubic& f, Rational l, Rational r) {
  Rational dl = f.slope(l), dr = f.slope(r);
  if (dl.is_zero()) return f.value(l).abs();
  if (dr.is_zero()) return f.value(r).abs();
  if (dl.sign() == dr.sign()) return std::nullopt;
  const Rational tol = critical_point_tolerance();
  while (r - l > tol) {
    Rational m = (l + r) / Rational(2);
    Rational dm = f.slope(m);
    if (dm.is_zero()) return f.value(m).abs();
    if (dm.sign() == dl.sign()) {
      l = m;
      dl = dm;
    } else {
      r = m;
      dr = dm;
    }
  }
  Rational m = (l + r) / Rational(2);
  return f.value(m).abs() + max(dl.abs(), dr.abs()) * (r - l) / Rational(2);
}

}  // namespace

Rational cubic_head_max(const std::array<Rational, 4>& a, const Rational& h) {
  Cubic f{a};
  Rational best = max(f.value(-h).abs(), f.value(h).abs());
  std::vector<Rational> cuts{-h};
  if (!a[3].is_zero()) {
    Rational vertex = -a[2] / (Rational(3) * a[3]);
    if (-h < vertex && vertex < h) cuts.push_back(vertex);
  }
  cuts.push_back(h);
  for (size_t i = 0; i + 1 < cuts.size(); ++i)
    if (auto v = critical_piece(f, cuts[i], cuts[i + 1])) best = max(best, *v);
  return best;
}

namespace {

PieceBound bound_piece(const Poly& p, const Rational& lo, const Rational& hi) {
  Rational c = (lo + hi) / Rational(2), h = (hi - lo) / Rational(2);
  Poly q = p.rebased(c);
  std::array<Rational, 4> head{q.coeff(0), q.coeff(1), q.coeff(2), q.coeff(3)};
  Rational tail(0), hk = h.pow(4);
  for (int k = 4; k <= q.degree(); ++k) {
    tail += q.coeff(k).abs() * hk;
    hk *= h;
  }
  return PieceBound{lo, hi, cubic_head_max(head, h), tail};
}

}  // namespace

SupBoundResult sup_bound_detail(const Poly& p, const PartitionPlan& plan) {
  SupBoundResult out;
  for (size_t i = 0; i + 1 < plan.points.size(); ++i) {
    out.pieces.push_back(bound_piece(p, plan.points[i], plan.points[i + 1]));
    out.bound = max(out.bound, out.pieces.back().bound());
  }
  return out;
}

Rational sup_bound(const Poly& p, const PartitionPlan& plan) { return sup_bound_detail(p, plan).bound; }

RefinedBound refine_until(const Poly& p, const PartitionPlan& plan, const Rational& target, int max_depth) {
  RefinedBound out{Rational(0), PartitionPlan{plan.name + "~refined", {plan.front()}}, true};
  std::function<void(const Rational&, const Rational&, int)> go = [&](const Rational& lo, const Rational& hi, int depth) {
    Rational b = bound_piece(p, lo, hi).bound();
    if (b < target || depth >= max_depth) {
      if (!(b < target)) out.reached = false;
      out.bound = max(out.bound, b);
      out.plan.points.push_back(hi);
      return;
    }
    Rational m = (lo + hi) / Rational(2);
    go(lo, m, depth + 1);
    go(m, hi, depth + 1);
  };
  for (size_t i = 0; i + 1 < plan.points.size(); ++i) go(plan.points[i], plan.points[i + 1], 0);
  return out;
}

const char* to_string(Certification c) {
  switch (c) {
    case Certification::certified: return "certified";
    case Certification::not_certified: return "not certified";
    case Certification::indeterminate: return "indeterminate";
  }
  return "?";
}

RationalBound rational_sup_bound(const Poly& num, const Poly& den, const PartitionPlan& plan, const Rational& eps,
                                 const PartitionPlan* den_plan) {
  RationalBound out;
  out.num_bound = sup_bound(num, plan);
  if (num.is_zero() && eps.sign() > 0) {
    out.status = Certification::certified;
    out.den_lower = Rational(1);
    out.ratio_bound = Rational(0);
    return out;
  }
  Poly shifted = den - Poly::constant(Rational(1), den.basepoint());
  out.den_lower = Rational(1) - sup_bound(shifted, den_plan ? *den_plan : plan);
  if (out.den_lower.sign() <= 0) {
    out.status = Certification::indeterminate;
    return out;
  }
  out.ratio_bound = out.num_bound / out.den_lower;
  out.status = out.num_bound < eps * out.den_lower ? Certification::certified : Certification::not_certified;
  return out;
}

}  // namespace p1cert::polybound
