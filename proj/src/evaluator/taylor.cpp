#include "p1cert/evaluator/taylor.hpp"

#include <algorithm>

namespace p1cert::evaluator {

ComplexValue SeriesState::eval(const ComplexValue& tau) const {
  ComplexValue s;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) s = s * tau + *it;
  return s;
}

ComplexValue SeriesState::deriv(const ComplexValue& tau) const {
  ComplexValue s;
  for (int k = order(); k >= 1; --k) s = s * tau + coeffs[k] * ComplexValue(Real(k));
  return s;
}

SeriesState taylor_coeffs(const ComplexValue& c0, const ComplexValue& c1, const ComplexValue& center, int n) {
  if (n < 2) throw std::invalid_argument("taylor_coeffs: order must be at least 2");
  SeriesState s;
  s.center = center;
  s.coeffs.resize(n + 1);
  s.coeffs[0] = c0;
  s.coeffs[1] = c1;
  for (int k = 0; k + 2 <= n; ++k) {
    ComplexValue conv;
    for (int j = 0; j <= k; ++j) conv += s.coeffs[j] * s.coeffs[k - j];
    ComplexValue rhs = ComplexValue(Real(6)) * conv;
    if (k == 0) rhs += center;
    if (k == 1) rhs += ComplexValue(Real(1));
    s.coeffs[k + 2] = rhs / ComplexValue(Real((k + 1) * (k + 2)));
  }
  return s;
}

PoleProximityError::PoleProximityError(const ComplexValue& t_, const ComplexValue& pole_)
    : std::runtime_error("solution blows up near t = " + to_string(t_, 8) + "; pole estimate " + to_string(pole_, 8)),
      t(t_),
      pole(pole_) {}

IntegrationResult integrate(const ComplexValue& ta, const ComplexValue& g, const ComplexValue& gp, const ComplexValue& tb,
                            const Real& tol, int order, std::vector<TrajectoryPoint>* trajectory) {
  if (order < 4) throw std::invalid_argument("integrate: order must be at least 4");
  IntegrationResult res{g, gp, Real(0), 0};
  ComplexValue t = ta;
  Real total = abs(tb - ta);
  if (total == 0) return res;
  ComplexValue dir = (tb - ta) / ComplexValue(total);
  Real done(0);
  const Real min_step = tol * Real(1e-6);
  if (trajectory) trajectory->push_back({t, res.g});

  while (done < total) {
    SeriesState s = taylor_coeffs(res.g, res.gp, t, order);
    Real scale = std::max(Real(1), abs(res.g));
    Real target = tol * scale;
    Real h = total - done;
    for (int k : {order - 1, order}) {
      Real ck = abs(s.coeffs[k]);
      if (ck > 0) h = std::min(h, Real(0.9) * boost::multiprecision::pow(target / ck, Real(1) / k));
    }
    if (h < min_step) throw PoleProximityError(t, t + ComplexValue(Real(2)) * res.g / res.gp);
    bool last = h >= total - done;
    ComplexValue tau = dir * ComplexValue(h);
    res.g = s.eval(tau);
    res.gp = s.deriv(tau);
    res.error_estimate += abs(s.coeffs[order - 1]) * boost::multiprecision::pow(h, order - 1) +
                          abs(s.coeffs[order]) * boost::multiprecision::pow(h, order);
    ++res.steps;
    done = last ? total : done + h;
    t = last ? tb : t + tau;
    if (trajectory) trajectory->push_back({t, res.g});
    if (!res.g.finite() || abs(res.g) > kBlowupThreshold)
      throw PoleProximityError(t, t + ComplexValue(Real(2)) * res.g / res.gp);
  }
  return res;
}

IntegrationResult integrate_fixed(const ComplexValue& ta, const ComplexValue& g, const ComplexValue& gp,
                                  const ComplexValue& tb, int steps, int order) {
  if (steps <= 0) throw std::invalid_argument("integrate_fixed: steps must be positive");
  IntegrationResult res{g, gp, Real(0), 0};
  ComplexValue tau = (tb - ta) / ComplexValue(Real(steps));
  ComplexValue t = ta;
  for (int i = 0; i < steps; ++i) {
    SeriesState s = taylor_coeffs(res.g, res.gp, t, order);
    res.g = s.eval(tau);
    res.gp = s.deriv(tau);
    t += tau;
    ++res.steps;
  }
  return res;
}

IntegrationResult integrate_path(const std::vector<ComplexValue>& path, const ComplexValue& g, const ComplexValue& gp,
                                 const Real& tol, int order, std::vector<TrajectoryPoint>* trajectory) {
  IntegrationResult acc{g, gp, Real(0), 0};
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    IntegrationResult r = integrate(path[i], acc.g, acc.gp, path[i + 1], tol, order, trajectory);
    acc.g = r.g;
    acc.gp = r.gp;
    acc.error_estimate += r.error_estimate;
    acc.steps += r.steps;
  }
  return acc;
}

RoundTrip forward_backward(const ComplexValue& ta, const ComplexValue& g, const ComplexValue& gp,
                           const ComplexValue& tb, const Real& tol, int order) {
  RoundTrip rt;
  rt.forward = integrate(ta, g, gp, tb, tol, order);
  IntegrationResult back = integrate(tb, rt.forward.g, rt.forward.gp, ta, tol, order);
  rt.defect = std::max(abs(back.g - g), abs(back.gp - gp));
  return rt;
}

ComplexValue ic_t0() { return ComplexValue(Real(-17) / 10); }
ComplexValue ic_g() { return ComplexValue(Real(-280) / 519); }
ComplexValue ic_gp() { return ComplexValue(Real(150) / 1013); }

}  // namespace p1cert::evaluator
