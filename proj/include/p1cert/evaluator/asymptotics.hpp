#ifndef P1CERT_EVALUATOR_ASYMPTOTICS_HPP
#define P1CERT_EVALUATOR_ASYMPTOTICS_HPP

#include <stdexcept>

#include "p1cert/evaluator/complex.hpp"
#include "p1cert/evaluator/frames.hpp"
#include "p1cert/numerics/interval.hpp"

namespace p1cert::evaluator {

enum class Region { omegaI, omega4 };

struct RegionError : std::domain_error {
  using std::domain_error::domain_error;
};

struct AsymptoticValue {
  ComplexValue value;
  Real error_bound;
};

// Omega_I (x on iR+, |x| >= 1): y_0(z) = i sqrt(z/6)(1 - 4/(25x^2)) with the
// bound from ||H|| <= (41/40)(784/3125) for |x| >= |x_0|, (23/20)(784/3125)
// below that.
// Omega_4 (|x| >= 3, arg x in [-pi/2, -pi/4]): y from h_0 with the bound
// |sqrt(z/6)| 4 |x|^{-3} from ||G|| <= 4.
AsymptoticValue asymptotic_y(const ComplexValue& z, Region region);

// h_0(x) of the Omega_4 quasi-solution.
ComplexValue h0(const ComplexValue& x);

// g(0) in -87/469 ± 1/167 and g'(0) in 41/134 ± 1/108 (checked by running the
// inner-interval certificate), plus their images y(0) = e^{-2i pi/5} g(0),
// y'(0) = -e^{-3i pi/5} g'(0); rotation keeps the radii.
struct ZeroEnclosure {
  Interval g, gp;
  ComplexValue y_center, yp_center;
  Rational y_radius, yp_radius;
};
ZeroEnclosure y_at_zero();

}  // namespace p1cert::evaluator

#endif
