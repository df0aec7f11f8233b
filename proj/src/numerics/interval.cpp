#include "p1cert/numerics/interval.hpp"

#include <cmath>

namespace p1cert {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw DomainError("interval with lo > hi: [" + lo_.str() + ", " + hi_.str() + "]");
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  return Interval(min(a.lo_, b.lo_), max(a.hi_, b.hi_));
}

Interval Interval::ball(const Rational& c, const Rational& r) {
  Rational ar = r.abs();
  return Interval(c - ar, c + ar);
}

Rational Interval::mag() const { return max(lo_.abs(), hi_.abs()); }

Rational Interval::mig() const {
  if (contains_zero()) return Rational(0);
  return min(lo_.abs(), hi_.abs());
}

Interval Interval::abs() const {
  if (lo_.sign() >= 0) return *this;
  if (hi_.sign() <= 0) return -*this;
  return Interval(Rational(0), mag());
}

Interval Interval::pow(unsigned n) const {
  if (n == 0) return Interval(Rational(1));
  int k = static_cast<int>(n);
  if (n % 2 == 1) return Interval(lo_.pow(k), hi_.pow(k));
  Interval a = abs();
  return Interval(a.lo_.pow(k), a.hi_.pow(k));
}

Interval Interval::outward(int bits) const { return Interval(lo_.floor_dyadic(bits), hi_.ceil_dyadic(bits)); }

Interval& Interval::operator+=(const Interval& o) {
  lo_ += o.lo_;
  hi_ += o.hi_;
  return *this;
}

Interval& Interval::operator-=(const Interval& o) {
  Rational nlo = lo_ - o.hi_;
  hi_ -= o.lo_;
  lo_ = std::move(nlo);
  return *this;
}

Interval& Interval::operator*=(const Interval& o) {
  if (is_point() && o.is_point()) {
    lo_ *= o.lo_;
    hi_ = lo_;
    return *this;
  }
  Rational a = lo_ * o.lo_, b = lo_ * o.hi_, c = hi_ * o.lo_, d = hi_ * o.hi_;
  lo_ = min(min(a, b), min(c, d));
  hi_ = max(max(a, b), max(c, d));
  return *this;
}

Interval& Interval::operator/=(const Interval& o) {
  if (o.contains_zero()) throw DomainError("interval division by an interval containing zero");
  Interval inv(Rational(1) / o.hi_, Rational(1) / o.lo_);
  return *this *= inv;
}

std::string Interval::str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }

Interval interval_arith(const Interval& a, const Interval& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw DomainError("unknown interval operation");
}

namespace {

// Bracket [a, b] of v^(1/n) for v >= 0 with b - a <= tol; dyadic bisection.
std::pair<Rational, Rational> root_bracket(const Rational& v, unsigned n, const Rational& tol) {
  if (v.is_zero()) return {Rational(0), Rational(0)};
  int k = static_cast<int>(n);
  double est = std::pow(v.to_double(), 1.0 / n);
  Rational a(0), b = max(v, Rational(1));
  if (std::isfinite(est) && est > 0) {
    Rational guess = Rational::from_double(est);
    if (guess.pow(k) == v) return {guess, guess};
    Rational lo = Rational::from_double(est * (1 - 1e-12));
    Rational hi = Rational::from_double(est * (1 + 1e-12));
    if (lo.pow(k) <= v) a = lo;
    if (hi.pow(k) >= v) b = hi;
  }
  while (b - a > tol) {
    Rational m = (a + b) / Rational(2);
    if (m.pow(k) <= v)
      a = m;
    else
      b = m;
  }
  return {a, b};
}

}  // namespace

Interval root_enclosure(const Interval& x, unsigned n, const Rational& tol) {
  if (n == 0) throw DomainError("root_enclosure: n must be positive");
  if (tol.sign() <= 0) throw DomainError("root_enclosure: tol must be positive");
  if (x.lo().sign() < 0) throw DomainError("root_enclosure: negative input");
  if (n == 1) return x;
  // Half the budget per endpoint keeps the total excess within tol.
  Rational half = tol / Rational(2);
  auto lo = root_bracket(x.lo(), n, half);
  if (x.is_point()) return Interval(lo.first, lo.second);
  auto hi = root_bracket(x.hi(), n, half);
  return Interval(lo.first, hi.second);
}

Interval sqrt(const Interval& x, const Rational& tol) { return root_enclosure(x, 2, tol); }

Interval rational_power(const Interval& x, int p, unsigned q, const Rational& tol) {
  Interval r = root_enclosure(x, q, tol);
  Interval pw = r.pow(static_cast<unsigned>(p < 0 ? -p : p));
  return p < 0 ? Interval(Rational(1)) / pw : pw;
}

}  // namespace p1cert
