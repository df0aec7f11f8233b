#include "doctest.h"
#include "p1cert/certificates/inner_interval.hpp"
#include "p1cert/evaluator/asymptotics.hpp"
#include "p1cert/evaluator/frames.hpp"
#include "p1cert/evaluator/poles.hpp"
#include "p1cert/evaluator/taylor.hpp"
#include "suites.hpp"

using namespace p1cert;
using namespace p1cert::evaluator;

namespace {

Real R(double x) { return Real(x); }
Real tol_default() { return boost::multiprecision::pow(Real(2), -100); }
bool near(const ComplexValue& a, const ComplexValue& b, const Real& eps) { return abs(a - b) < eps; }

ComplexValue z0() { return ComplexValue::polar(Real(17) / 10, pi() / 5); }

// Precision is process-wide; restore it whatever happens.
struct PrecisionGuard {
  unsigned saved = working_precision();
  explicit PrecisionGuard(unsigned bits) { set_working_precision(bits); }
  ~PrecisionGuard() { set_working_precision(saved); }
};

}  // namespace

TEST_CASE("complex arithmetic at working precision") {
  CHECK(working_precision() >= kMinPrecisionBits);
  ComplexValue a(R(1), R(2)), b(R(-3), R(0.5));
  CHECK(near(a * b / b, a, Real(1e-35)));
  CHECK(near(exp(log(a)), a, Real(1e-35)));
  CHECK(near(sqrt(a) * sqrt(a), a, Real(1e-35)));
  CHECK(near(unit_root(1, 2), i_unit(), Real(1e-35)));
  CHECK(abs(arg(ComplexValue(R(-1), R(0))) - pi()) < Real(1e-35));
  CHECK(near(pow(a, Real(2)), a * a, Real(1e-35)));
  CHECK(ComplexValue(R(1), R(0)).finite());
}

TEST_CASE("frame examples") {
  ComplexValue x = z_to_x(z0());
  // x(z0) = i 3.437...
  CHECK(abs(x.re) < Real(1e-30));
  CHECK(x.im > Real(3.437));
  CHECK(x.im < Real(3.438));
  CHECK(near(t_to_z(ComplexValue(Real(-17) / 10)), z0(), Real(1e-35)));
  CHECK(near(z_to_t(z0()), ComplexValue(Real(-17) / 10), Real(1e-35)));
  CHECK_THROWS_AS(z_to_x(ComplexValue(R(0))), FrameError);
  FramePoint p = frame_map(ComplexValue(R(0)), Frame::z);
  CHECK_FALSE(p.x.has_value());

  // (C1 e^(-2i pi/5), C2 e^(2i pi/5)) at z0 -> (g, g') ~ (-0.53949, 0.14808).
  Real ax = abs(x);
  Real c1 = -boost::multiprecision::sqrt(Real(17) / 60) * (1 + Real(4) / (25 * ax * ax));
  Real c2 = boost::multiprecision::sqrt(Real(60) / 17) * (Real(1) / 12 - Real(4) / (75 * ax * ax));
  Pair g = y_to_g({ComplexValue(c1) * unit_root(-2, 5), ComplexValue(c2) * unit_root(2, 5)});
  CHECK(abs(g.v.im) < Real(1e-30));
  CHECK(abs(g.d.im) < Real(1e-30));
  CHECK(abs(g.v.re - Real(-280) / 519) < Real(1e-5));
  CHECK(abs(g.d.re - Real(150) / 1013) < Real(1e-5));
  Pair back = g_to_y(g);
  CHECK(near(back.v, ComplexValue(c1) * unit_root(-2, 5), Real(1e-35)));
  CHECK(near(rotate_solution_value(ComplexValue(R(1)), 5), ComplexValue(R(1)), Real(1e-35)));
}

TEST_CASE("property: frame round trips to 1e-25") {
  testing::Outcome o = testing::frame_roundtrips(1000, 1e-25);
  INFO(o.detail);
  CHECK(o.pass);
}

TEST_CASE("Taylor coefficients") {
  SeriesState s0 = taylor_coeffs(ComplexValue(R(0)), ComplexValue(R(0)), ComplexValue(R(0)), 6);
  CHECK(abs(s0.coeffs[2]) == 0);
  CHECK(abs(s0.coeffs[3] - ComplexValue(Real(1) / 6)) < Real(1e-35));
  Real a = Real(87) / 469, b = Real(41) / 134;
  SeriesState s = taylor_coeffs(ComplexValue(-a), ComplexValue(b), ComplexValue(R(0)), 8);
  CHECK(abs(s.coeffs[2] - ComplexValue(3 * a * a)) < Real(1e-35));
  CHECK(abs(s.coeffs[3] - ComplexValue(-2 * a * b + Real(1) / 6)) < Real(1e-35));
  ComplexValue c(Real(3) / 10, Real(-2) / 10), c0(Real(1) / 10);
  SeriesState sc = taylor_coeffs(c0, ComplexValue(R(0.2)), c, 8);
  CHECK(near(sc.coeffs[2], ComplexValue(R(3)) * c0 * c0 + c / ComplexValue(R(2)), Real(1e-35)));
}

TEST_CASE("order-40 truncation satisfies g'' = 6g^2 + t through order 38") {
  ComplexValue center(R(0.4), R(0.7));
  SeriesState s = taylor_coeffs(ComplexValue(R(-0.2), R(0.1)), ComplexValue(R(0.3)), center, 40);
  const auto& c = s.coeffs;
  for (int k = 0; k <= 38; ++k) {
    ComplexValue lhs = c[k + 2] * ComplexValue(Real((k + 1) * (k + 2)));
    ComplexValue sq;
    for (int j = 0; j <= k; ++j) sq += c[j] * c[k - j];
    ComplexValue rhs = ComplexValue(R(6)) * sq + (k == 0 ? center : ComplexValue()) + (k == 1 ? ComplexValue(R(1)) : ComplexValue());
    CHECK(abs(lhs - rhs) <= Real(1e-30) * (1 + abs(rhs)));
  }
}

TEST_CASE("integration lands inside the rigorous enclosures of g(0), g'(0)") {
  PrecisionGuard guard(100);
  OriginData o = origin_data(tol_default());
  Interval g = Interval::ball(certificates::kG0Center, certificates::kG0Radius);
  Interval gp = Interval::ball(certificates::kG0pCenter, certificates::kG0pRadius);
  CHECK(Real(g.lo().to_double()) < o.g.re);
  CHECK(o.g.re < Real(g.hi().to_double()));
  CHECK(Real(gp.lo().to_double()) < o.gp.re);
  CHECK(o.gp.re < Real(gp.hi().to_double()));
  ZeroEnclosure z = y_at_zero();
  CHECK(z.g == g);
  CHECK(z.y_radius == Rational(1, 167));
  CHECK(near(g_to_y({o.g, o.gp}).v, z.y_center, Real(1.0 / 167)));

  RoundTrip rt = forward_backward(ic_t0(), ic_g(), ic_gp(), ComplexValue(R(0)), tol_default());
  INFO("defect " << to_string(rt.defect, 4));
  CHECK(rt.defect < Real(1e-20));
}

TEST_CASE("integrator order: halving the step cuts the round-trip defect at least 4x") {
  // The adaptive controller keeps every step's error proportional to tol,
  // so the order is observed on the fixed-step variant.
  Real ref_g = origin_data(boost::multiprecision::pow(Real(2), -120)).g.re;
  Real prev(0);
  for (int steps : {4, 8, 16}) {
    IntegrationResult fwd = integrate_fixed(ic_t0(), ic_g(), ic_gp(), ComplexValue(R(0)), steps, 6);
    IntegrationResult back = integrate_fixed(ComplexValue(R(0)), fwd.g, fwd.gp, ic_t0(), steps, 6);
    Real defect = std::max(abs(back.g - ic_g()), abs(back.gp - ic_gp()));
    Real err = boost::multiprecision::abs(fwd.g.re - ref_g);
    INFO("steps " << steps << " defect " << to_string(defect, 3) << " error " << to_string(err, 3));
    if (prev > 0) CHECK(defect * 4 <= prev);
    prev = defect;
  }
}

TEST_CASE("real initial data stay real on [t0, 0]") {
  std::vector<TrajectoryPoint> traj;
  integrate(ic_t0(), ic_g(), ic_gp(), ComplexValue(R(0)), tol_default(), kDefaultOrder, &traj);
  REQUIRE(traj.size() > 2);
  for (const auto& p : traj) {
    CHECK(boost::multiprecision::abs(p.g.im) < Real(1e-35));
    CHECK(boost::multiprecision::abs(p.t.im) < Real(1e-35));
  }
}

TEST_CASE("Maclaurin series and integration agree at |t| = 1") {
  OriginData o = origin_data(tol_default());
  SeriesState s = taylor_coeffs(o.g, o.gp, ComplexValue(R(0)), 120);
  for (double theta : {0.0, 0.5, 1.5, 3.0, -2.0}) {
    ComplexValue t = ComplexValue::polar(Real(1), Real(theta));
    IntegrationResult r = integrate(ComplexValue(R(0)), o.g, o.gp, t, tol_default());
    INFO("theta " << theta);
    CHECK(abs(s.eval(t) - r.g) < Real(1e-10));
    CHECK(abs(s.deriv(t) - r.gp) < Real(1e-10));
  }
}

TEST_CASE("asymptotics on the anti-Stokes line and in Omega_4") {
  AsymptoticValue a = asymptotic_y(z0(), Region::omegaI);
  CHECK(a.error_bound <= Real(3) / 890);
  Real ax = abs(z_to_x(z0()));
  Real c1 = -boost::multiprecision::sqrt(Real(17) / 60) * (1 + Real(4) / (25 * ax * ax));
  CHECK(near(a.value, ComplexValue(c1) * unit_root(-2, 5), Real(1e-25)));
  // |x| -> infinity: the H correction vanishes.
  ComplexValue zf = ComplexValue::polar(Real(1e6), pi() / 5);
  AsymptoticValue far = asymptotic_y(zf, Region::omegaI);
  CHECK(far.error_bound < Real(1e-12) * abs(far.value));
  CHECK_THROWS_AS(asymptotic_y(ComplexValue(R(1)), Region::omegaI), RegionError);
  CHECK_THROWS_AS(asymptotic_y(x_to_z(ComplexValue(R(0), R(-2))), Region::omega4), RegionError);
}

TEST_CASE("x = -3i: Omega_4 value agrees with integration from z0") {
  ComplexValue z = x_to_z(ComplexValue(R(0), R(-3)));
  AsymptoticValue a = asymptotic_y(z, Region::omega4);
  // t0 -> 0 -> t along the certified disk; the initial data carry the z0
  // matching error (3/890, 29/4468), which the flow amplifies mildly.
  IntegrationResult r = integrate_path({ic_t0(), ComplexValue(R(0)), z_to_t(z)}, ic_g(), ic_gp(), tol_default());
  ComplexValue y = g_to_y({r.g, r.gp}).v;
  Real diff = abs(y - a.value);
  INFO("|y_ode - y_asym| = " << to_string(diff, 4) << ", asymptotic bound " << to_string(a.error_bound, 4));
  CHECK(diff <= a.error_bound + Real(3) / 890 * 10);
}

TEST_CASE("pole estimates") {
  Real tol = boost::multiprecision::pow(Real(2), -88);
  PoleScan scan = min_pole_distance(21, tol);
  REQUIRE(scan.nearest.has_value());
  Real d = scan.nearest->distance;
  INFO("nearest pole at distance " << to_string(d, 8));
  CHECK(boost::multiprecision::abs(d - Real(2.38)) < Real(0.05 * 2.38));
  CHECK(d > Real(37) / 20);
  // Into the pole-free sector: nothing within the horizon, also at half tolerance.
  OriginData o = origin_data(tol);
  CHECK_FALSE(pole_estimate(pi(), o, tol, 10).has_value());
  CHECK_FALSE(pole_estimate(pi(), o, tol / 2, 10).has_value());
  CHECK_FALSE(pole_estimate(pi() * 3 / 5, o, tol, 10).has_value());
}

TEST_CASE("blowup is reported with a pole location") {
  OriginData o = origin_data(tol_default());
  try {
    integrate(ComplexValue(R(0)), o.g, o.gp, ComplexValue(R(3)), tol_default());
    FAIL("expected a pole between 2 and 3");
  } catch (const PoleProximityError& e) {
    CHECK(boost::multiprecision::abs(e.pole.re - Real(2.38)) < Real(0.1));
  }
}
