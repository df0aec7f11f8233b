#ifndef P1CERT_EVALUATOR_FRAMES_HPP
#define P1CERT_EVALUATOR_FRAMES_HPP

#include <optional>
#include <stdexcept>

#include "p1cert/evaluator/complex.hpp"

namespace p1cert::evaluator {

enum class Frame { z, x, t };

struct FrameError : std::domain_error {
  using std::domain_error::domain_error;
};

// x = e^{i pi/4} (24 z)^{5/4} / 30 and t = -z e^{-i pi/5}. t is real on the
// anti-Stokes line arg z = pi/5 but complex in general.
struct FramePoint {
  ComplexValue z;
  std::optional<ComplexValue> x;  // absent at z = 0
  ComplexValue t;
  Frame tag = Frame::z;  // the frame the point was given in
};

// The x map uses arg x = pi/4 + (5/4) arg z without wrapping, and its
// inverse arg z = (4/5)(arg x - pi/4) with arg x principal; the two are
// inverse for arg z in (-pi, 3pi/5], which covers Omega_I, Omega_1 ∪ Omega_2
// and Omega_4.
FramePoint frame_map(const ComplexValue& p, Frame from);

ComplexValue z_to_x(const ComplexValue& z);
ComplexValue x_to_z(const ComplexValue& x);
ComplexValue z_to_t(const ComplexValue& z);
ComplexValue t_to_z(const ComplexValue& t);

struct Pair {
  ComplexValue v, d;  // value and derivative
};
// g(t) = e^{2i pi/5} y(z), g'(t) = -e^{3i pi/5} y'(z), z = -t e^{i pi/5}.
Pair y_to_g(const Pair& y);
Pair g_to_y(const Pair& g);

// Five-fold symmetry: if y solves y'' = 6y^2 + z so does
// Y(z) = e^{4i pi k/5} y(e^{2i pi k/5} z). Given y at e^{2i pi k/5} z,
// returns Y(z).
ComplexValue rotate_solution_value(const ComplexValue& y, int k);

}  // namespace p1cert::evaluator

#endif
