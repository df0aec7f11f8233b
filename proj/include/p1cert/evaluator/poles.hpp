#ifndef P1CERT_EVALUATOR_POLES_HPP
#define P1CERT_EVALUATOR_POLES_HPP

#include <optional>
#include <vector>

#include "p1cert/evaluator/taylor.hpp"

namespace p1cert::evaluator {

// Numerical g(0), g'(0): the initial data at t_0 integrated to t = 0.
struct OriginData {
  ComplexValue g, gp;
};
OriginData origin_data(const Real& tol);

struct PoleHit {
  Real direction;
  ComplexValue pole;
  Real distance;
};

inline constexpr double kDefaultHorizon = 10;

// Walks the ray t = r e^{i theta} from 0. When the local series sees a
// singularity closer than `near` it integrates straight at it until blowup
// and fits the double pole g ~ (t - t_p)^{-2}. Empty when the ray reaches
// the horizon.
std::optional<PoleHit> pole_estimate(const Real& theta, const OriginData& origin, const Real& tol,
                                     double horizon = kDefaultHorizon);

struct PoleScan {
  std::vector<PoleHit> hits;
  std::optional<PoleHit> nearest;
  int directions = 0;
};
// Directions spread evenly over [lo, hi]; runs in parallel.
PoleScan scan_poles(const Real& lo, const Real& hi, int directions, const Real& tol, double horizon = kDefaultHorizon);
// The sector -pi/5 < arg t < pi/5 holds every pole of g (the rest is the
// image of the pole-free sector).
PoleScan min_pole_distance(int directions, const Real& tol);

}  // namespace p1cert::evaluator

#endif
