#ifndef P1CERT_CERTIFICATES_OUTER_HPP
#define P1CERT_CERTIFICATES_OUTER_HPP

#include "p1cert/certificates/quadrature.hpp"
#include "p1cert/certificates/report.hpp"
#include "p1cert/formal/tables.hpp"

namespace p1cert::certificates {

// Weighted-norm bound of H_0 on the imaginary axis: (2/5)(392/625).
Rational h0_norm_bound();

// Contraction conditions on Omega_I = {x in iR+, |x| >= rho}. rho is an
// interval so the enclosure of |x_0| can be passed directly.
CertificateReport check_omega_I(const Interval& rho, const Rational& eps);

struct Z0Bounds {
  Interval h_norm;     // ||H|| <= (41/40)(784/3125)
  Interval h_x0;       // |H(x_0)|
  Interval hp_x0;      // |H'(x_0)|
  Interval dy;         // |y - y_0| at z_0
  Interval dyp;        // |y' - y_0'| at z_0
  Interval c1, c2;     // y_0(z_0) = C1 e^{-2i pi/5}, y_0'(z_0) = C2 e^{2i pi/5}
};
Z0Bounds compute_z0_bounds();
// Printed |x_0|, C1 and C2 are taken from `data`.
CertificateReport check_z0_bounds(const formal::AppendixData& data = formal::default_appendix());

// Omega_1 ∪ Omega_2 with rho_0 = |x_0|. The panel count defaults above the
// quadrature default because N <= 203/138 has a margin of only 4e-5.
inline constexpr int kOmega12Panels = 16384;
CertificateReport check_omega_12(const Rational& eps = Rational(3, 2), int panels = kOmega12Panels);

}  // namespace p1cert::certificates

#endif
