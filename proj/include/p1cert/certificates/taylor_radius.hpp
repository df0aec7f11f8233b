#ifndef P1CERT_CERTIFICATES_TAYLOR_RADIUS_HPP
#define P1CERT_CERTIFICATES_TAYLOR_RADIUS_HPP

#include "p1cert/certificates/report.hpp"

namespace p1cert::certificates {

inline const Rational kRadius{37, 20};
inline constexpr int kInductionHorizon = 256;

// Range of c~_0..c~_3 over the initial-data box, the base cases
// |c~_k| < (k+1)/R_0^(k+2) and the majorant induction up to the horizon.
CertificateReport check_taylor_radius(int horizon = kInductionHorizon);

}  // namespace p1cert::certificates

#endif
