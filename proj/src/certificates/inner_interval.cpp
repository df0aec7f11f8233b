#include "p1cert/certificates/inner_interval.hpp"

#include "p1cert/certificates/inner_polys.hpp"
#include "p1cert/certificates/outer.hpp"
#include "p1cert/data/data_files.hpp"
#include "p1cert/polybound/sup_bound.hpp"

namespace p1cert::certificates {

using polybound::Poly;
using polybound::PartitionPlan;

const polybound::PartitionSet& default_partitions() {
  static const polybound::PartitionSet s = polybound::load_partitions(data::default_partitions_path());
  return s;
}

namespace {

Interval I(const Rational& x) { return Interval(x); }
Interval upto(const Rational& x) { return Interval(Rational(0), x); }

}  // namespace

CertificateReport check_inner_interval(const InnerConfig& cfg) {
  const polybound::PartitionSet& parts = cfg.partitions ? *cfg.partitions : default_partitions();
  const InnerPolys& P = inner_polys();
  CertificateReport r;
  r.name = "inner_interval";
  r.input("alpha1", cfg.alpha1.str());
  r.input("alpha2", cfg.alpha2.str());
  r.input("ball", cfg.ball.str());
  r.input("partitions", parts.source);
  r.input("partitions_sha256", parts.sha256);

  for (const char* name : {"R", "W_minus_1", "J1", "J1_prime", "J2", "J2_prime", "A", "B1", "f_plus", "f_minus",
                           "f_plus_prime", "f_minus_prime"}) {
    if (!parts.plans.count(name)) {
      r.precondition_violation = std::string("partition '") + name + "' missing from " + parts.source;
      return r;
    }
  }
  const PartitionPlan* plan_W = &parts.at("W_minus_1");
  auto plan = [&](const std::string& name) -> const PartitionPlan& { return parts.at(name); };
  auto sup = [&](const Poly& p, const std::string& name) { return polybound::sup_bound(p, plan(name)); };

  // Matching at t_0: a1 = g(t_0) - g0(t_0), a2 = g'(t_0) - g0'(t_0), with
  // g(t_0) = C1 + O(3/890) and g'(t_0) = C2 + O(29/4468).
  Z0Bounds z = compute_z0_bounds();
  Interval a1 = z.dy + (z.c1 - I(P.g0.coeff(0))).abs();
  Interval a2 = z.dyp + (z.c2 - I(P.g0.coeff(1))).abs();
  r.check("|a1| < alpha1 from the z_0 matching", a1, Relation::lt, I(cfg.alpha1));
  r.check("|a2| < alpha2 from the z_0 matching", a2, Relation::lt, I(cfg.alpha2));

  // The thresholds below are the values carried into the later estimates.
  const Rational R_b(1, 8619), J1_b(6, 5), J2_b(3, 7), J1p_b(5, 2), J2p_b(21, 20), W_b(1, 500), A_b(1, 1216),
      B1_b(1, 492), f_b(1, 180), fp_b(1, 90);

  r.check("|R| < 1/8619", upto(sup(P.R, "R")), Relation::lt, I(R_b));
  Rational j1 = sup(P.J1, "J1"), j2 = sup(P.J2, "J2");
  r.check("||J1|| <= 6/5", upto(j1), Relation::le, I(J1_b));
  r.check("||J2|| <= 3/7", upto(j2), Relation::le, I(J2_b));
  r.check("||J1'|| <= 5/2", upto(sup(polybound::differentiate(P.J1), "J1_prime")), Relation::le, I(J1p_b));
  r.check("||J2'|| <= 21/20", upto(sup(polybound::differentiate(P.J2), "J2_prime")), Relation::le, I(J2p_b));
  Poly one = Poly::constant(Rational(1), P.W.basepoint());
  Rational w = polybound::sup_bound(P.W - one, *plan_W);
  r.check("|W - 1| < 1/500", upto(w), Relation::lt, I(W_b));

  // |P/W| <= sup|P| / (1 - sup|W - 1|).
  auto ratio = [&](const std::string& desc, const Poly& num, const std::string& name, const Rational& bound,
                   Relation rel) {
    polybound::RationalBound rb = polybound::rational_sup_bound(num, P.W, plan(name), bound, plan_W);
    if (!rb.ratio_bound) {
      r.check_flag(desc + " (W not bounded away from 0)", false);
      return Rational(0);
    }
    r.check(desc, upto(*rb.ratio_bound), rel, I(bound));
    return *rb.ratio_bound;
  };
  Rational j1w = ratio("||J1/W|| <= 6/5", P.J1, "J1", J1_b, Relation::le);
  Rational j2w = ratio("||J2/W|| <= 3/7", P.J2, "J2", J2_b, Relation::le);
  ratio("||A|| < 1/1216", P.A_num, "A", A_b, Relation::lt);
  ratio("||B1|| < 1/492", P.B1_num, "B1", B1_b, Relation::lt);
  r.notes.push_back(std::string("||J1/W|| bound ") + (j1w >= j1 ? "is" : "is not") + " the binding one of the 6/5 pair (" +
                    j1w.sci(6, Round::up) + " vs ||J1|| " + j1.sci(6, Round::up) + ")");
  r.notes.push_back(std::string("||J2/W|| bound ") + (j2w >= j2 ? "is" : "is not") + " the binding one of the 3/7 pair (" +
                    j2w.sci(6, Round::up) + " vs ||J2|| " + j2.sci(6, Round::up) + ")");

  // a1 J1 + a2 J2 is linear in (a1, a2): its sup over the box is attained at
  // a1 = alpha1, a2 = ±alpha2 (the other corners are negatives of these).
  Poly fp = cfg.alpha1 * P.J1 + cfg.alpha2 * P.J2;
  Poly fm = cfg.alpha1 * P.J1 - cfg.alpha2 * P.J2;
  r.check("||alpha1 J1 + alpha2 J2|| < 1/180", upto(sup(fp, "f_plus")), Relation::lt, I(f_b));
  r.check("||alpha1 J1 - alpha2 J2|| < 1/180", upto(sup(fm, "f_minus")), Relation::lt, I(f_b));
  r.check("||alpha1 J1' + alpha2 J2'|| < 1/90", upto(sup(polybound::differentiate(fp), "f_plus_prime")),
          Relation::lt, I(fp_b));
  r.check("||alpha1 J1' - alpha2 J2'|| < 1/90", upto(sup(polybound::differentiate(fm), "f_minus_prime")),
          Relation::lt, I(fp_b));

  // Green's operators, integrals bounded by length 17/10 times the sup of
  // the kernel: |G(s,t)| <= |J2(t)||J1(s)/W(s)| + |J1(t)||J2(s)/W(s)|.
  const Rational len(17, 10);
  Rational K1 = len * (J2_b * J1_b + J1_b * J2_b);
  Rational K2 = len * (J2p_b * J1_b + J1p_b * J2_b);
  r.notes.push_back("||K1|| <= " + K1.str() + ", ||K2|| <= " + K2.str());

  // For ||d||^(1/2) <= rho: ||d|| <= rho, ||d'|| <= 2 rho and
  // |r(d)| <= ||A|| 2rho + ||B1|| rho + 6 rho^2.
  const Rational& rho = cfg.ball;
  Rational Kmax = max(K1, K2 / Rational(2));
  Rational lip = Rational(2) * A_b + B1_b + Rational(12) * rho;
  r.check("contraction factor max(||K1||, ||K2||/2)(2||A|| + ||B1|| + 12 rho) < 1/6", I(Kmax * lip), Relation::lt,
          I(Rational(1, 6)));
  Rational rb = Rational(2) * A_b * rho + B1_b * rho + Rational(6) * rho * rho;
  r.check("ball maps into itself: ||a J|| + ||K1|| (||R|| + |r|) <= rho", I(f_b + K1 * (R_b + rb)), Relation::le,
          I(rho));
  r.check("ball maps into itself: (||a J'|| + ||K2|| (||R|| + |r|))/2 <= rho",
          I((fp_b + K2 * (R_b + rb)) / Rational(2)), Relation::le, I(rho));

  Rational eps1 = K1 * (rb + R_b), eps2 = K2 * (rb + R_b);
  const Rational eps1_b(1, 1500), eps2_b(1, 658);
  r.check("eps1 <= ||K1|| (2||A|| rho + ||B1|| rho + 6 rho^2 + ||R||) < 1/1500", I(eps1), Relation::lt, I(eps1_b));
  r.check("eps2 <= ||K2|| (2||A|| rho + ||B1|| rho + 6 rho^2 + ||R||) < 1/658", I(eps2), Relation::lt, I(eps2_b));

  // t = 0 is s = 17/10.
  const Rational s0(17, 10);
  Poly g0p = polybound::differentiate(P.g0);
  Rational at0 = (P.g0.eval_local(s0) - kG0Center).abs() + cfg.alpha1 * P.J1.eval_local(s0).abs() +
                 cfg.alpha2 * P.J2.eval_local(s0).abs() + eps1_b;
  Rational atp0 = (g0p.eval_local(s0) - kG0pCenter).abs() +
                  cfg.alpha1 * polybound::differentiate(P.J1).eval_local(s0).abs() +
                  cfg.alpha2 * polybound::differentiate(P.J2).eval_local(s0).abs() + eps2_b;
  r.check("|g(0) + 87/469| <= |g0(0) + a| + alpha1|J1(0)| + alpha2|J2(0)| + eps1 < 1/167", upto(at0), Relation::lt,
          I(kG0Radius));
  r.check("|g'(0) - 41/134| <= |g0'(0) - b| + alpha1|J1'(0)| + alpha2|J2'(0)| + eps2 < 1/108", upto(atp0),
          Relation::lt, I(kG0pRadius));
  return r;
}

}  // namespace p1cert::certificates
