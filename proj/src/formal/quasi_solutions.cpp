#include "p1cert/formal/quasi_solutions.hpp"

namespace p1cert::formal {

namespace {

FormalSeries mono(long num, long den, int k, int j, int m) {
  return FormalSeries::monomial(Rational(num, den), k, j, m);
}

const FormalSeries& one() {
  static const FormalSeries o = FormalSeries::constant(Rational(1));
  return o;
}

}  // namespace

FormalSeries xi() { return mono(1, 1, 1, 1, 1); }

FormalSeries h0() {
  FormalSeries x = xi(), x2 = power(x, 2), x3 = power(x, 3), x4 = power(x, 4), x5 = power(x, 5);
  FormalSeries lead = x + x2 * Rational(1, 6) + x3 * Rational(1, 48) + x4 * Rational(1, 432) + x5 * Rational(5, 20736);
  FormalSeries first = x * Rational(-1, 8) + x2 * Rational(-11, 72) + x3 * Rational(-43, 1152);
  FormalSeries second = x * Rational(9, 128);
  return lead + x_pow(2) * first + x_pow(4) * second;
}

FormalSeries residual_R() {
  FormalSeries h = h0(), dh = differentiate(h), ddh = differentiate(dh);
  FormalSeries inner = ddh + x_pow(2) * dh - h - (h * h) * Rational(1, 2) - x_pow(8) * Rational(392, 625);
  return x_pow(-1) * inner;
}

FormalSeries J() {
  return mono(1, 3, 1, 0, 1) + mono(1, 16, 2, 1, 2) + mono(-19, 72, 1, 2, 1) + mono(1, 108, 3, 2, 3) +
         mono(-5, 48, 2, 3, 2) + mono(25, 20736, 4, 3, 4);
}

FormalSeries j_aux() {
  return mono(3, 16, 1, 0, 1) + mono(-19, 24, 0, 1, 0) + mono(1, 36, 2, 1, 2) + mono(-5, 16, 1, 2, 1) +
         mono(25, 6912, 3, 2, 3);
}

FormalSeries y1() { return e_pow(1) * (one() + x_pow(1) * J()); }

FormalSeries q_times_y1() {
  FormalSeries y = y1();
  return differentiate(differentiate(y)) - (one() + h0()) * y;
}

FormalSeries y10() { return e_pow(1); }
FormalSeries y11() { return mono(1, 3, 1, 1, 2); }
FormalSeries z20() { return mono(1, 2, 0, 0, -2); }
FormalSeries z21() { return mono(-2, 3, 1, 1, -1); }

FormalSeries z2R0() {
  return mono(23, 72, 2, 2, 0) + mono(-361, 3456, 2, 4, 0) + mono(-23, 216, 3, 3, 1) + mono(-577, 41472, 4, 4, 2);
}

FormalSeries E_integrand() {
  FormalSeries j = J();
  FormalSeries bracket = one() - x_pow(1) * j * Rational(2) + x_pow(2) * (j * j) * Rational(3);
  FormalSeries e2x = e_pow(-2);
  return e2x * bracket - e2x + mono(2, 3, 1, 1, -1) - mono(1, 3, 1, 3, -1) - mono(5, 24, 2, 2, 0) -
         mono(7, 36, 1, 3, -1) - differentiate(z2R0());
}

FormalSeries T_product() {
  FormalSeries r = residual_R();
  return (y10() + y11()) * (r.restrict_j(5) + r.restrict_j(6));
}

FormalSeries U_product() { return T_product() * (z20() + z21()); }

}  // namespace p1cert::formal
