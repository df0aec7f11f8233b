#ifndef P1CERT_CERTIFICATES_INNER_POLYS_HPP
#define P1CERT_CERTIFICATES_INNER_POLYS_HPP

#include "p1cert/polybound/poly.hpp"

namespace p1cert::certificates {

// Quasi-solutions on [t_0, 0], t_0 = -17/10, all written in s = t - t_0
// (basepoint t_0).
struct InnerPolys {
  polybound::Poly g0, J1, J2;
  polybound::Poly R;      // -(g0'' - 6 g0^2 - t), degree 14
  polybound::Poly W;      // J1 J2' - J2 J1'
  polybound::Poly A_num;  // A = A_num / W
  polybound::Poly B_num;  // B = B_num / W
  polybound::Poly B1_num; // B1 = 12 g0 + B = (12 g0 W + B_num) / W
};

Rational inner_t0();
const InnerPolys& inner_polys();

}  // namespace p1cert::certificates

#endif
