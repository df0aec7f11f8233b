#ifndef P1CERT_POLYBOUND_POLY_HPP
#define P1CERT_POLYBOUND_POLY_HPP

#include <string>
#include <vector>

#include "p1cert/numerics/interval.hpp"

namespace p1cert::polybound {

// P(t) = sum_k c_k (t - basepoint)^k with exact rational coefficients.
// "Local" variable s = t - basepoint.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs, Rational basepoint = Rational(0));
  static Poly constant(const Rational& c, const Rational& basepoint = Rational(0));

  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& basepoint() const { return base_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero polynomial
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int k) const;

  Rational eval_local(const Rational& s) const;
  Interval eval_local(const Interval& s) const;
  Rational eval(const Rational& t) const { return eval_local(t - base_); }
  Interval eval(const Interval& t) const { return eval_local(t - Interval(base_)); }
  double eval_double(double t) const;

  // Same function, re-expanded about another basepoint.
  Poly rebased(const Rational& new_base) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator-(const Poly& a) { return a * Rational(-1); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.base_ == b.base_ && a.c_ == b.c_; }

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
  Rational base_;
};

Poly differentiate(const Poly& p);
// q(u) = p(c + u) in the local variable; q's basepoint is p.basepoint() + c.
Poly taylor_shift(const Poly& p, const Rational& c);
// Coefficients of q(u) = p_local(a*u + b); the result has basepoint 0.
Poly compose_affine(const Poly& p, const Rational& a, const Rational& b);

// sum |c_k| m^k with m = max(|lo|, |hi|), lo/hi in the local variable.
Rational l1_norm(const Poly& p, const Rational& lo, const Rational& hi);

}  // namespace p1cert::polybound

#endif
