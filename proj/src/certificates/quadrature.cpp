#include "p1cert/certificates/quadrature.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace p1cert::certificates {

namespace {

constexpr int kBits = 80;

// (1+u)^(-n/4) for u >= 0 an interval; decreasing in u.
Interval inv_quarter_power(const Interval& u, int n, const Rational& tol) {
  Interval base = Interval(1) + u;
  Interval r = root_enclosure(base, 4, tol);
  return (Interval(1) / r.pow(static_cast<unsigned>(n))).outward(kBits);
}

Interval square_range(const Interval& p) {
  if (p.contains_zero()) return Interval(Rational(0), max(p.lo() * p.lo(), p.hi() * p.hi()));
  return p.abs().square();
}

struct Partial {
  Interval sum{0};
  Rational err{0};
};

}  // namespace

QuadratureEnclosure quad_enclosure(const Rational& alpha, const Rational& T, int panels) {
  if (alpha <= Rational(1, 2)) throw DomainError("quad_enclosure: alpha must exceed 1/2");
  if (T < Rational(1)) throw DomainError("quad_enclosure: cutoff T must be at least 1");
  if (panels <= 0) throw DomainError("quad_enclosure: panels must be positive");
  Rational four_alpha = alpha * Rational(4);
  if (four_alpha.den() != 1) throw DomainError("quad_enclosure: alpha must be a multiple of 1/4");
  const int n = static_cast<int>(four_alpha.num().get_si());

  const Rational a(-1);
  const Rational h = (T - a) / Rational(panels);
  const Rational tol = Rational::pow2(-kBits);

  // f(p) = (1+p²)^(-alpha), f''(p) = 2alpha (1+p²)^(-alpha-2) ((2alpha+1)p² - 1).
  auto panel = [&](int i, Partial& acc) {
    Rational l = a + h * Rational(i), r = l + h;
    Rational m = (l + r) / Rational(2);
    acc.sum += inv_quarter_power(Interval(m * m), n, tol);
    Interval u = square_range(Interval(l, r));
    Interval d2 = Interval(Rational(2) * alpha) * inv_quarter_power(u, n + 8, tol) *
                  (Interval(Rational(2) * alpha + Rational(1)) * u - Interval(1));
    acc.err += d2.mag().ceil_dyadic(kBits);
  };

  unsigned nthreads = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
  std::vector<Partial> parts(nthreads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nthreads; ++t)
    pool.emplace_back([&, t] {
      for (int i = static_cast<int>(t); i < panels; i += static_cast<int>(nthreads)) panel(i, parts[t]);
    });
  for (auto& th : pool) th.join();

  // Dyadic partial sums add exactly, so the thread split does not change the result.
  Interval sum(0);
  Rational err(0);
  for (const auto& p : parts) {
    sum += p.sum;
    err += p.err;
  }
  Rational remainder = err * h * h * h / Rational(24);
  Interval finite = sum * Interval(h) + Interval(-remainder, remainder);

  Rational two_alpha_m1 = Rational(2) * alpha - Rational(1);
  // T^(1-2alpha) = T^(-(4alpha-2)/2): a half-integer power of T.
  Interval tpow = rational_power(Interval(T), -(n - 2), 2, tol);
  Rational tail = (tpow.hi() / two_alpha_m1).ceil_dyadic(kBits);

  QuadratureEnclosure q;
  q.alpha = alpha;
  q.cutoff = T;
  q.panels = panels;
  q.finite_part = finite;
  q.tail = tail;
  // The integrand is positive, so the tail only raises the upper end.
  q.value = Interval(finite.lo(), finite.hi() + tail);
  return q;
}

}  // namespace p1cert::certificates
