#include "p1cert/evaluator/poles.hpp"

#include <algorithm>
#include <thread>

namespace p1cert::evaluator {

OriginData origin_data(const Real& tol) {
  IntegrationResult r = integrate(ic_t0(), ic_g(), ic_gp(), ComplexValue(Real(0)), tol);
  return {r.g, r.gp};
}

namespace {

constexpr double kNear = 0.25;

// For a double pole at p the coefficients about c behave like
// (k+1)(p-c)^{-k-2}, so p - c ≈ (c_k / c_{k+1}) (k+2)/(k+1).
std::optional<ComplexValue> local_pole_offset(const SeriesState& s) {
  int n = s.order();
  if (abs(s.coeffs[n]) == 0) return std::nullopt;
  return s.coeffs[n - 1] / s.coeffs[n] * ComplexValue(Real(n + 1) / n);
}

}  // namespace

std::optional<PoleHit> pole_estimate(const Real& theta, const OriginData& origin, const Real& tol, double horizon) {
  const int order = kDefaultOrder;
  ComplexValue dir = ComplexValue::polar(Real(1), theta);
  ComplexValue t(Real(0)), g = origin.g, gp = origin.gp;
  Real r(0);
  auto hit = [&](const ComplexValue& pole) { return PoleHit{theta, pole, abs(pole)}; };
  while (r < horizon) {
    SeriesState s = taylor_coeffs(g, gp, t, order);
    if (auto d = local_pole_offset(s); d && abs(*d) < kNear) {
      // Aim past the estimated pole so the blowup triggers on the way.
      try {
        integrate(t, g, gp, t + ComplexValue(Real(2)) * *d, tol, order);
      } catch (const PoleProximityError& e) {
        return hit(e.pole);
      }
    }
    Real target = tol * std::max(Real(1), abs(g));
    Real h = Real(horizon) - r;
    for (int k : {order - 1, order}) {
      Real ck = abs(s.coeffs[k]);
      if (ck > 0) h = std::min(h, Real(0.9) * boost::multiprecision::pow(target / ck, Real(1) / k));
    }
    ComplexValue tau = dir * ComplexValue(h);
    g = s.eval(tau);
    gp = s.deriv(tau);
    t += tau;
    r += h;
    if (!g.finite() || abs(g) > kBlowupThreshold) return hit(t + ComplexValue(Real(2)) * g / gp);
  }
  return std::nullopt;
}

PoleScan scan_poles(const Real& lo, const Real& hi, int directions, const Real& tol, double horizon) {
  PoleScan scan;
  scan.directions = directions;
  OriginData origin = origin_data(tol);
  std::vector<std::optional<PoleHit>> found(directions);
  unsigned nthreads = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < nthreads; ++w)
    pool.emplace_back([&, w] {
      for (int i = static_cast<int>(w); i < directions; i += static_cast<int>(nthreads)) {
        Real theta = directions == 1 ? lo : lo + (hi - lo) * i / (directions - 1);
        found[i] = pole_estimate(theta, origin, tol, horizon);
      }
    });
  for (auto& th : pool) th.join();
  for (auto& f : found) {
    if (!f) continue;
    scan.hits.push_back(*f);
    if (!scan.nearest || f->distance < scan.nearest->distance) scan.nearest = *f;
  }
  return scan;
}

PoleScan min_pole_distance(int directions, const Real& tol) {
  return scan_poles(-pi() / 5, pi() / 5, directions, tol);
}

}  // namespace p1cert::evaluator
