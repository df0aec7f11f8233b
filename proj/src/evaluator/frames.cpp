#include "p1cert/evaluator/frames.hpp"

namespace p1cert::evaluator {

ComplexValue z_to_x(const ComplexValue& z) {
  Real r = abs(z);
  if (r == 0) throw FrameError("x frame is undefined at z = 0");
  Real modulus = boost::multiprecision::pow(24 * r, Real(5) / 4) / 30;
  return ComplexValue::polar(modulus, pi() / 4 + arg(z) * 5 / 4);
}

ComplexValue x_to_z(const ComplexValue& x) {
  Real r = abs(x);
  if (r == 0) throw FrameError("x = 0 has no preimage");
  Real modulus = boost::multiprecision::pow(30 * r, Real(4) / 5) / 24;
  return ComplexValue::polar(modulus, (arg(x) - pi() / 4) * 4 / 5);
}

ComplexValue z_to_t(const ComplexValue& z) { return -(z * unit_root(-1, 5)); }
ComplexValue t_to_z(const ComplexValue& t) { return -(t * unit_root(1, 5)); }

FramePoint frame_map(const ComplexValue& p, Frame from) {
  FramePoint fp;
  fp.tag = from;
  switch (from) {
    case Frame::z: fp.z = p; break;
    case Frame::x: fp.z = x_to_z(p); break;
    case Frame::t: fp.z = t_to_z(p); break;
  }
  fp.t = from == Frame::t ? p : z_to_t(fp.z);
  if (from == Frame::x)
    fp.x = p;
  else if (abs(fp.z) != 0)
    fp.x = z_to_x(fp.z);
  return fp;
}

Pair y_to_g(const Pair& y) { return {unit_root(2, 5) * y.v, -(unit_root(3, 5) * y.d)}; }
Pair g_to_y(const Pair& g) { return {unit_root(-2, 5) * g.v, -(unit_root(-3, 5) * g.d)}; }

ComplexValue rotate_solution_value(const ComplexValue& y, int k) { return unit_root(4 * k, 5) * y; }

}  // namespace p1cert::evaluator
