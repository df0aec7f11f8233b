#ifndef P1CERT_CERTIFICATES_QUADRATURE_HPP
#define P1CERT_CERTIFICATES_QUADRATURE_HPP

#include "p1cert/numerics/interval.hpp"

namespace p1cert::certificates {

// Enclosure of I(alpha) = ∫_{-1}^{∞} (1+p²)^(-alpha) dp.
struct QuadratureEnclosure {
  Rational alpha;
  Interval value;
  Rational cutoff;
  int panels = 0;
  Interval finite_part;  // midpoint sum plus remainder on [-1, T]
  Rational tail;         // T^(1-2alpha)/(2alpha-1), already added to value.hi
};

inline constexpr int kDefaultPanels = 4096;
inline constexpr long kDefaultCutoff = 64;

// Composite midpoint rule on [-1, T] with the remainder bounded per panel by
// h³/24 · sup|f''|, plus the tail bound. alpha must be a multiple of 1/4
// (the integrand is evaluated through fourth roots).
QuadratureEnclosure quad_enclosure(const Rational& alpha, const Rational& T = Rational(kDefaultCutoff),
                                   int panels = kDefaultPanels);

}  // namespace p1cert::certificates

#endif
