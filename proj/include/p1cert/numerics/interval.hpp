#ifndef P1CERT_NUMERICS_INTERVAL_HPP
#define P1CERT_NUMERICS_INTERVAL_HPP

#include <string>

#include "p1cert/numerics/rational.hpp"

namespace p1cert {

// Closed interval [lo, hi] with exact rational endpoints.
class Interval {
 public:
  Interval() = default;
  Interval(Rational v) : lo_(v), hi_(std::move(v)) {}  // NOLINT: point intervals convert implicitly
  Interval(long v) : Interval(Rational(v)) {}          // NOLINT
  Interval(Rational lo, Rational hi);

  static Interval hull(const Interval& a, const Interval& b);
  // [c - r, c + r]
  static Interval ball(const Rational& c, const Rational& r);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational mid() const { return (lo_ + hi_) / Rational(2); }
  // max |x| over the interval
  Rational mag() const;
  // min |x| over the interval
  Rational mig() const;
  bool is_point() const { return lo_ == hi_; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

  Interval abs() const;
  Interval pow(unsigned n) const;
  Interval square() const { return pow(2); }
  // Outward rounding of both endpoints to multiples of 2^-bits; keeps
  // denominators bounded in long iterations.
  Interval outward(int bits) const;

  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  Interval& operator/=(const Interval& o);

  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  friend Interval operator/(Interval a, const Interval& b) { return a /= b; }
  friend Interval operator-(const Interval& a) { return Interval(-a.hi_, -a.lo_); }

  friend bool operator==(const Interval& a, const Interval& b) { return a.lo_ == b.lo_ && a.hi_ == b.hi_; }

  std::string str() const;

 private:
  Rational lo_, hi_;
};

enum class ArithOp { add, sub, mul, div };
Interval interval_arith(const Interval& a, const Interval& b, ArithOp op);

// Certain comparisons: true only if the relation holds for every pair of points.
inline bool certainly_lt(const Interval& a, const Interval& b) { return a.hi() < b.lo(); }
inline bool certainly_le(const Interval& a, const Interval& b) { return a.hi() <= b.lo(); }

// Y with Y ⊇ {t^(1/n) : t ∈ x}; each endpoint is bracketed by bisection on
// t -> t^n to width at most tol.
Interval root_enclosure(const Interval& x, unsigned n, const Rational& tol);
Interval sqrt(const Interval& x, const Rational& tol);
// x^(p/q) for x >= 0, computed as (x^(1/q))^p; p may be negative.
Interval rational_power(const Interval& x, int p, unsigned q, const Rational& tol);

}  // namespace p1cert

#endif
