#include "p1cert/evaluator/asymptotics.hpp"

#include "p1cert/certificates/inner_interval.hpp"
#include "p1cert/numerics/constants.hpp"

namespace p1cert::evaluator {

namespace {

Real to_real(const Rational& q) { return Real(q.num().get_str()) / Real(q.den().get_str()); }

Real angle_slack() { return boost::multiprecision::pow(Real(2), -static_cast<int>(working_precision()) / 2); }

}  // namespace

ComplexValue h0(const ComplexValue& x) {
  ComplexValue S(Real(0), boost::multiprecision::sqrt(Real(6) / (5 * pi())));
  ComplexValue xi = S * exp(-x) / sqrt(x);
  auto c = [](long p, long q) { return ComplexValue(Real(p) / q); };
  ComplexValue xi2 = xi * xi, xi3 = xi2 * xi, xi4 = xi3 * xi, xi5 = xi4 * xi;
  ComplexValue lead = xi + c(1, 6) * xi2 + c(1, 48) * xi3 + c(1, 432) * xi4 + c(5, 20736) * xi5;
  ComplexValue first = c(-1, 8) * xi + c(-11, 72) * xi2 + c(-43, 1152) * xi3;
  return lead + first / x + c(9, 128) * xi / (x * x);
}

AsymptoticValue asymptotic_y(const ComplexValue& z, Region region) {
  ComplexValue x = z_to_x(z);
  Real ax = abs(x), th = arg(x);
  ComplexValue pref = i_unit() * sqrt(z / ComplexValue(Real(6)));
  ComplexValue base = ComplexValue(Real(1)) - ComplexValue(Real(4) / 25) / (x * x);
  if (region == Region::omegaI) {
    if (boost::multiprecision::abs(th - pi() / 2) > angle_slack())
      throw RegionError("Omega_I needs x on the positive imaginary axis (arg z = pi/5)");
    if (ax < 1 - angle_slack()) throw RegionError("Omega_I needs |x| >= 1");
    // |x_0| itself must select the sharper constant despite rounding.
    Real x0 = to_real(constants().abs_x0.lo()) * (1 - angle_slack());
    Real k = ax >= x0 ? Real(41) / 40 : Real(23) / 20;
    Real err = abs(sqrt(z / (ComplexValue(Real(6)) * x))) * k * Real(784) / 3125 *
               boost::multiprecision::pow(ax, Real(-5) / 2);
    return {pref * base, err};
  }
  if (ax < 3 * (1 - angle_slack())) throw RegionError("Omega_4 needs |x| >= 3");
  if (th < -pi() / 2 - angle_slack() || th > -pi() / 4 + angle_slack())
    throw RegionError("Omega_4 needs arg x in [-pi/2, -pi/4]");
  Real err = abs(sqrt(z / ComplexValue(Real(6)))) * 4 / (ax * ax * ax);
  return {pref * (base + h0(x)), err};
}

ZeroEnclosure y_at_zero() {
  using certificates::kG0Center;
  using certificates::kG0pCenter;
  using certificates::kG0pRadius;
  using certificates::kG0Radius;
  if (!certificates::check_inner_interval().verdict())
    throw std::runtime_error("y_at_zero: the inner-interval certificate does not pass");
  ZeroEnclosure e;
  e.g = Interval::ball(kG0Center, kG0Radius);
  e.gp = Interval::ball(kG0pCenter, kG0pRadius);
  Pair y = g_to_y({ComplexValue(to_real(kG0Center)), ComplexValue(to_real(kG0pCenter))});
  e.y_center = y.v;
  e.yp_center = y.d;
  e.y_radius = kG0Radius;
  e.yp_radius = kG0pRadius;
  return e;
}

}  // namespace p1cert::evaluator
