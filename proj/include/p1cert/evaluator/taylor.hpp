#ifndef P1CERT_EVALUATOR_TAYLOR_HPP
#define P1CERT_EVALUATOR_TAYLOR_HPP

#include <stdexcept>
#include <vector>

#include "p1cert/evaluator/complex.hpp"

namespace p1cert::evaluator {

// Taylor coefficients of the solution of g'' = 6 g^2 + t about `center`:
// (k+1)(k+2) c_{k+2} = 6 sum_{j<=k} c_j c_{k-j} + [k=0] center + [k=1].
struct SeriesState {
  ComplexValue center;
  std::vector<ComplexValue> coeffs;  // c_0..c_N
  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  ComplexValue eval(const ComplexValue& tau) const;   // sum c_k tau^k
  ComplexValue deriv(const ComplexValue& tau) const;  // d/dtau
};

SeriesState taylor_coeffs(const ComplexValue& c0, const ComplexValue& c1, const ComplexValue& center, int n);

// |g| exceeded the blowup threshold; `pole` is t + 2g/g', the double-pole
// fit g ~ (t - t_p)^{-2}.
struct PoleProximityError : std::runtime_error {
  ComplexValue t, pole;
  PoleProximityError(const ComplexValue& t_, const ComplexValue& pole_);
};

inline constexpr double kBlowupThreshold = 1e8;
inline constexpr int kDefaultOrder = 24;

struct IntegrationResult {
  ComplexValue g, gp;
  Real error_estimate{0};  // sum of truncation terms over steps
  int steps = 0;
};

struct TrajectoryPoint {
  ComplexValue t, g;
};

// Adaptive Taylor stepping along the segment t_a -> t_b. Each step keeps the
// last two series terms below tol * max(1, |g|).
IntegrationResult integrate(const ComplexValue& ta, const ComplexValue& g, const ComplexValue& gp, const ComplexValue& tb,
                            const Real& tol, int order = kDefaultOrder, std::vector<TrajectoryPoint>* trajectory = nullptr);

// Fixed-step variant: `steps` equal steps of the given order, no error
// control. Used to observe the order of the local expansion.
IntegrationResult integrate_fixed(const ComplexValue& ta, const ComplexValue& g, const ComplexValue& gp,
                                  const ComplexValue& tb, int steps, int order);

// Polygonal path through the given points.
IntegrationResult integrate_path(const std::vector<ComplexValue>& path, const ComplexValue& g, const ComplexValue& gp,
                                 const Real& tol, int order = kDefaultOrder,
                                 std::vector<TrajectoryPoint>* trajectory = nullptr);

struct RoundTrip {
  IntegrationResult forward;
  Real defect{0};  // max(|g - g_a|, |g' - g'_a|) after t_a -> t_b -> t_a
};
RoundTrip forward_backward(const ComplexValue& ta, const ComplexValue& g, const ComplexValue& gp,
                           const ComplexValue& tb, const Real& tol, int order = kDefaultOrder);

// Initial data at t_0 = -17/10 used for the inner interval.
ComplexValue ic_t0();
ComplexValue ic_g();
ComplexValue ic_gp();

}  // namespace p1cert::evaluator

#endif
