#ifndef P1CERT_TESTS_ORACLE_HPP
#define P1CERT_TESTS_ORACLE_HPP

// 200-bit floating-point oracles. Nothing here goes through the library's
// interval or evaluator code.

#include <array>
#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <vector>

#include "p1cert/numerics/interval.hpp"
#include "p1cert/polybound/poly.hpp"

namespace p1cert::oracle {

using mp = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<200>,
                                         boost::multiprecision::et_off>;

inline mp to_mp(const Rational& q) { return mp(q.num().get_str()) / mp(q.den().get_str()); }

inline mp pi() { return boost::math::constants::pi<mp>(); }

inline mp abs_s() { return sqrt(mp(6) / (5 * pi())); }
inline mp abs_x0() { return pow(mp(24) * mp(17) / 10, mp(5) / 4) / 30; }

// Does the rational interval contain x, allowing for the oracle's own
// rounding (2^-190 relative)?
inline bool encloses(const Interval& I, const mp& x) {
  mp slack = abs(x) * pow(mp(2), -190) + pow(mp(2), -400);
  return to_mp(I.lo()) <= x + slack && x - slack <= to_mp(I.hi());
}

// Value and first two derivatives, carried through + - *.
struct Jet {
  mp v{0}, d1{0}, d2{0};
  friend Jet operator+(const Jet& a, const Jet& b) { return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2}; }
  friend Jet operator-(const Jet& a, const Jet& b) { return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2}; }
  friend Jet operator*(const Jet& a, const Jet& b) {
    return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2 * a.d1 * b.d1 + a.v * b.d2};
  }
  static Jet constant(const mp& c) { return {c, 0, 0}; }
  static Jet variable(const mp& x) { return {x, 1, 0}; }
};

// p at t as a jet, by Horner in s = t - basepoint from the raw coefficients.
inline Jet jet(const polybound::Poly& p, const mp& t) {
  Jet s = Jet::variable(t - to_mp(p.basepoint()));
  Jet acc;
  const auto& c = p.coeffs();
  for (size_t k = c.size(); k-- > 0;) acc = acc * s + Jet::constant(to_mp(c[k]));
  return acc;
}

}  // namespace p1cert::oracle

#endif
