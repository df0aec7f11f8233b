#include "p1cert/certificates/outer.hpp"

#include "p1cert/formal/tables.hpp"
#include "p1cert/functionals/catalog.hpp"
#include "p1cert/numerics/constants.hpp"

namespace p1cert::certificates {

namespace {

const Rational& tol() {
  static const Rational t = Rational::pow2(-110);
  return t;
}

Interval I(const Rational& x) { return Interval(x); }

Interval printed(const formal::AppendixData& data, const std::string& name) {
  return functionals::printed_range(data.value(name));
}

}  // namespace

Rational h0_norm_bound() { return Rational(2, 5) * Rational(392, 625); }

CertificateReport check_omega_I(const Interval& rho, const Rational& eps) {
  CertificateReport r;
  r.name = "omega_I";
  r.input("rho", rho.is_point() ? rho.lo().str() : decimal(rho, 20));
  r.input("eps", eps.str());
  if (rho.lo() < Rational(1) || eps.sign() <= 0) {
    r.precondition_violation = "requires rho >= 1 and eps > 0";
    return r;
  }
  Rational h0 = Rational(784, 3125);
  r.check("||H_0|| <= 784/3125 from (2/5)(392/625)", I(h0_norm_bound()), Relation::le, I(h0));

  Interval one_eps = I(Rational(1) + eps);
  Interval lhs1 = one_eps / (I(14) * rho) + one_eps.square() * I(h0) / (I(9) * rho.square());
  r.check("(1+eps)/(14 rho) + (1+eps)^2 ||H_0|| / (9 rho^2) <= eps", lhs1, Relation::le, I(eps));
  Interval lhs2 = I(1) / (I(14) * rho) + I(2) * one_eps * I(h0) / (I(9) * rho.square());
  r.check("1/(14 rho) + 2(1+eps) ||H_0|| / (9 rho^2) < 1", lhs2, Relation::lt, I(1));
  r.notes.push_back("ball radius (1+eps)||H_0|| = " + (one_eps * I(h0)).lo().str());
  return r;
}

Z0Bounds compute_z0_bounds() {
  const Constants& c = constants();
  Interval ax = c.abs_x0;
  Interval sq = sqrt(ax, tol());
  Interval ax52 = ax.square() * sq, ax72 = ax52 * ax, ax92 = ax72 * ax;

  Z0Bounds z;
  z.h_norm = I(Rational(41, 40) * Rational(784, 3125));
  z.h_x0 = z.h_norm / ax52;
  z.hp_x0 = z.h_norm / (I(14) * ax72) + z.h_norm.square() / (I(9) * ax92) + I(Rational(392, 625)) / ax72;

  // |z_0| = 17/10, |x_0| = ax; |i sqrt(z_0 / (6 x_0))| = sqrt(17 / (60 ax)).
  Interval mod_z0 = I(Rational(17, 10));
  z.dy = sqrt(mod_z0 / (I(6) * ax), tol()) * z.h_x0;
  z.dyp = sqrt(mod_z0 / I(6), tol()) / (mod_z0 * sq) *
          (z.h_x0 / I(8) + I(Rational(5, 4)) * ax * z.hp_x0);

  // x_0 = i ax, so x_0^2 = -ax^2; the phases of i sqrt(z_0) and
  // i/sqrt(z_0) are e^{3i pi/5} and e^{2i pi/5}.
  Interval ax2 = ax.square();
  z.c1 = -(sqrt(mod_z0 / I(6), tol()) * (I(1) + I(Rational(4, 25)) / ax2));
  z.c2 = sqrt(I(6) / mod_z0, tol()) * (I(Rational(1, 12)) - I(Rational(4, 75)) / ax2);
  return z;
}

CertificateReport check_z0_bounds(const formal::AppendixData& data) {
  CertificateReport r;
  r.name = "z0_bounds";
  r.input("z0", "17/10 e^{i pi/5}");
  r.input("eps", "1/40");
  CertificateReport pre = check_omega_I(constants().abs_x0, Rational(1, 40));
  r.check_flag("Omega_I contraction holds at (rho, eps) = (|x_0|, 1/40)", pre.verdict());

  Z0Bounds z = compute_z0_bounds();
  r.check("|x_0| = (24*1.7)^(5/4)/30 matches 3.437...", constants().abs_x0, Relation::within, printed(data, "abs_x0"));
  r.check("|y(z_0) - y_0(z_0)| <= 3/890", z.dy, Relation::le, I(Rational(3, 890)));
  r.check("|y'(z_0) - y_0'(z_0)| <= 29/4468", z.dyp, Relation::le, I(Rational(29, 4468)));
  r.check("C1 = -0.5394994...", z.c1, Relation::within, printed(data, "C1"));
  r.check("C2 = 0.148075...", z.c2, Relation::within, printed(data, "C2"));
  r.notes.push_back("|H(x_0)| <= " + decimal(z.h_x0) + ", |H'(x_0)| <= " + decimal(z.hp_x0));
  return r;
}

CertificateReport check_omega_12(const Rational& eps, int panels) {
  CertificateReport r;
  r.name = "omega_12";
  r.input("rho0", "|x_0|");
  r.input("eps", eps.str());
  r.input("quadrature_panels", std::to_string(panels));
  r.input("quadrature_cutoff", std::to_string(kDefaultCutoff));

  QuadratureEnclosure q74 = quad_enclosure(Rational(7, 4), Rational(kDefaultCutoff), panels);
  QuadratureEnclosure q94 = quad_enclosure(Rational(9, 4), Rational(kDefaultCutoff), panels);
  QuadratureEnclosure q114 = quad_enclosure(Rational(11, 4), Rational(kDefaultCutoff), panels);

  Interval r4 = root_enclosure(I(2), 4, tol());  // 2^{1/4}
  Interval r54 = I(2) * r4;
  Interval M = I(Rational(196, 625)) * (r54 * q74.value + I(Rational(2, 5)));
  Interval N = I(Rational(1, 18)) + r4 * q114.value;
  Interval L = I(Rational(1, 28)) + q94.value / r54;

  const Rational Mb(32, 25), Nb(203, 138), Lb(3, 5);
  r.check("M = (196/625)[2^{5/4} I(7/4) + 2/5] <= 32/25", M, Relation::le, I(Mb));
  r.check("N = 1/18 + 2^{1/4} I(11/4) <= 203/138", N, Relation::le, I(Nb));
  r.check("L = 1/28 + 2^{-5/4} I(9/4) <= 3/5", L, Relation::le, I(Lb));

  const Interval& s2 = constants().sqrt2;
  r.check("Omega_1 source bound 784 sqrt2/3125 <= M", I(Rational(784, 3125)) * s2, Relation::le, I(Mb));
  r.check("Omega_1 linear bound sqrt2/14 <= L", s2 / I(14), Relation::le, I(Lb));
  r.check("Omega_1 quadratic bound sqrt2/9 <= N", s2 / I(9), Relation::le, I(Nb));

  Interval rho0 = constants().abs_x0;
  Interval one_eps = I(Rational(1) + eps);
  Interval lhs1 = I(Lb) * one_eps / rho0 + I(Nb) * I(Mb) * one_eps.square() / rho0.square();
  r.check("L (1+eps)/rho0 + N M (1+eps)^2/rho0^2 <= eps", lhs1, Relation::le, I(eps));
  Interval lhs2 = I(Lb) / rho0 + I(2) * I(Nb) * I(Mb) * one_eps / rho0.square();
  r.check("L/rho0 + 2 N M (1+eps)/rho0^2 < 1", lhs2, Relation::lt, I(1));

  r.notes.push_back("ball radius (1+eps) M = " + (one_eps * I(Mb)).lo().str());
  for (const auto* q : {&q74, &q94, &q114})
    r.notes.push_back("I(" + q->alpha.str() + ") in " + decimal(q->value) + ", tail " + q->tail.sci(3, Round::up));
  return r;
}

}  // namespace p1cert::certificates
