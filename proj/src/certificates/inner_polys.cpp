#include "p1cert/certificates/inner_polys.hpp"

namespace p1cert::certificates {

using polybound::Poly;

Rational inner_t0() { return Rational(-17, 10); }

namespace {

InnerPolys build() {
  const Rational t0 = inner_t0();
  auto poly = [&](std::vector<Rational> c) { return Poly(std::move(c), t0); };
  InnerPolys p;
  p.g0 = poly({Rational(-280, 519), Rational(150, 1013), Rational(239, 10331), Rational(110, 14779),
               Rational(-32, 9853), Rational(9, 4397), Rational(-16, 39505), Rational(8, 49105)});
  p.J1 = poly({Rational(1), Rational(0), Rational(-9489, 2932), Rational(1350, 4721), Rational(359, 199),
               Rational(-1526, 3719), Rational(-708, 1633), Rational(503, 2201), Rational(-211, 6486)});
  p.J2 = poly({Rational(0), Rational(1), Rational(-48, 659797), Rational(-2941, 2730), Rational(675, 4873),
               Rational(1832, 4745), Rational(-2305, 19401), Rational(-677, 14054), Rational(1573, 53783),
               Rational(-531, 128216)});

  using polybound::differentiate;
  Poly t = poly({t0, Rational(1)});
  Poly g0pp = differentiate(differentiate(p.g0));
  p.R = -(g0pp - Rational(6) * p.g0 * p.g0 - t);

  Poly J1p = differentiate(p.J1), J2p = differentiate(p.J2);
  Poly J1pp = differentiate(J1p), J2pp = differentiate(J2p);
  p.W = p.J1 * J2p - p.J2 * J1p;
  p.A_num = p.J2 * J1pp - p.J1 * J2pp;
  p.B_num = J2pp * J1p - J1pp * J2p;
  p.B1_num = Rational(12) * p.g0 * p.W + p.B_num;
  return p;
}

}  // namespace

const InnerPolys& inner_polys() {
  static const InnerPolys p = build();
  return p;
}

}  // namespace p1cert::certificates
