#include "p1cert/certificates/taylor_radius.hpp"

#include <array>
#include <vector>

#include "p1cert/certificates/inner_interval.hpp"
#include "p1cert/formal/verify.hpp"

namespace p1cert::certificates {

namespace {

Interval I(const Rational& x) { return Interval(x); }

struct Coeffs {
  Rational c0, c1, c2, c3;
};

Coeffs at(const Rational& a, const Rational& b, const Rational& eps, int s1, int s2) {
  Rational c0 = -a + eps * Rational(s1), c1 = b + eps * Rational(s2);
  return {c0, c1, Rational(3) * c0 * c0, Rational(2) * c0 * c1 + Rational(1, 6)};
}

}  // namespace

CertificateReport check_taylor_radius(int horizon) {
  CertificateReport r;
  r.name = "taylor_radius";
  const Rational a = -kG0Center, b = kG0pCenter, eps = kG0pRadius;
  const Rational& R0 = kRadius;
  r.input("a", a.str());
  r.input("b", b.str());
  r.input("eps", eps.str());
  r.input("R0", R0.str());
  r.input("horizon", std::to_string(horizon));

  // The g(0) bound 1/167 is covered by the larger 1/108 used for both.
  r.check("1/167 <= 1/108", I(kG0Radius), Relation::le, I(eps));

  // c~_0, c~_1 are affine in sigma; c~_2 = 3 c~_0^2 is stationary only at
  // sigma1 = a/eps; c~_3 = 2 c~_0 c~_1 + 1/6 only at (a/eps, -b/eps). Both
  // lie outside [-1,1]^2, so the extremes sit at the corners.
  r.check("interior critical point of c~_2, sigma1 = a/eps, lies outside [-1,1]", I(a / eps), Relation::gt, I(1));
  r.check("interior critical point of c~_3, sigma2 = -b/eps, lies outside [-1,1]", I(b / eps), Relation::gt, I(1));

  std::array<Interval, 4> range;
  bool first = true;
  for (int s1 : {-1, 1})
    for (int s2 : {-1, 1}) {
      Coeffs c = at(a, b, eps, s1, s2);
      std::array<Interval, 4> v{I(-c.c0), I(c.c1), I(c.c2), I(c.c3)};
      for (int k = 0; k < 4; ++k) range[k] = first ? v[k] : Interval::hull(range[k], v[k]);
      first = false;
    }
  const std::array<Rational, 4> ub{Rational(1, 5), Rational(6, 19), Rational(1, 8), Rational(1, 15)};
  const char* names[4] = {"-c~_0", "c~_1", "c~_2", "c~_3"};
  for (int k = 0; k < 4; ++k) {
    r.check(std::string(names[k]) + " > 0", range[k], Relation::gt, I(0));
    r.check(std::string(names[k]) + " < " + ub[k].str(), range[k], Relation::lt, I(ub[k]));
  }

  for (int k = 0; k < 4; ++k)
    r.check("base case k = " + std::to_string(k) + ": " + ub[k].str() + " < (k+1)/R0^(k+2)", I(ub[k]), Relation::lt,
            I(Rational(k + 1) / R0.pow(k + 2)));

  r.check_flag("a_k = (k+1) rho^(k+2) solves the recurrence exactly (symbolic in rho, k <= 64)", [] {
    for (int k = 0; k <= 64; ++k)
      if (!formal::majorant_identity_holds(k)) return false;
    return true;
  }());

  // Normalized d_k = |c~_k| R0^(k+2)/(k+1). The recurrence becomes
  // d_{k+2} = 6 sum_j (j+1)(k-j+1) d_j d_{k-j} / ((k+1)(k+2)(k+3)),
  // independent of R0, and the identity above says d_j <= 1 propagates.
  std::vector<Rational> d;
  for (int k = 0; k < 4; ++k) d.push_back((ub[k] * R0.pow(k + 2) / Rational(k + 1)).ceil_dyadic(128));
  Rational worst(0);
  int worst_k = 0;
  for (int k = 2; k + 2 <= horizon; ++k) {
    Rational s(0);
    for (int j = 0; j <= k; ++j) s += Rational((j + 1) * (k - j + 1)) * d[j] * d[k - j];
    Rational next = (Rational(6) * s / Rational(static_cast<long>(k + 1) * (k + 2) * (k + 3))).ceil_dyadic(128);
    if (next > worst) {
      worst = next;
      worst_k = k + 2;
    }
    d.push_back(next);
  }
  r.check("induction: max_{4 <= k <= " + std::to_string(horizon) + "} |c~_k| R0^(k+2)/(k+1) < 1", I(worst),
          Relation::lt, I(1));
  r.notes.push_back("largest normalized coefficient at k = " + std::to_string(worst_k));
  r.notes.push_back("radius of convergence of the Maclaurin series of g is at least 37/20");
  return r;
}

}  // namespace p1cert::certificates
