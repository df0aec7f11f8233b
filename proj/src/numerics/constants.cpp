#include "p1cert/numerics/constants.hpp"

namespace p1cert {

Interval pi_enclosure() {
  // 3.141592653589793238462643383279502884197|169399...
  static const Rational lo = Rational::parse("3.141592653589793238462643383279502884197");
  static const Rational hi = lo + Rational::pow10(-39);
  return Interval(lo, hi);
}

namespace {

Constants build() {
  Constants c;
  c.pi = pi_enclosure();
  c.abs_s = sqrt(Interval(6) / (Interval(5) * c.pi), Rational::pow10(-16));
  Interval fourth_root = root_enclosure(Interval(Rational(204, 5)), 4, Rational::pow10(-40));
  c.abs_x0 = fourth_root.pow(5) / Interval(30);
  c.sqrt2 = sqrt(Interval(2), Rational::pow10(-40));
  return c;
}

}  // namespace

const Constants& constants() {
  static const Constants c = build();
  return c;
}

}  // namespace p1cert
