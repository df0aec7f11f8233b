#ifndef P1CERT_FORMAL_QUASI_SOLUTIONS_HPP
#define P1CERT_FORMAL_QUASI_SOLUTIONS_HPP

#include "p1cert/formal/series.hpp"

// Explicit approximate solutions in the (x, h) frame and the series built
// from them. S stays a formal symbol throughout.
namespace p1cert::formal {

FormalSeries xi();  // S e^(-x) x^(-1/2)
// Fixed truncation of the transseries for h.
FormalSeries h0();
// sqrt(x) (h0'' + h0'/x - h0 - h0^2/2 - 392/(625 x^4)), computed from h0.
FormalSeries residual_R();

FormalSeries J();
FormalSeries j_aux();  // J = S e^(-x)/3 (1 + j_aux/sqrt(x))
FormalSeries y1();     // e^(-x) (1 + J/sqrt(x))
// y1'' - (1 + h0) y1
FormalSeries q_times_y1();

FormalSeries y10();  // e^(-x)
FormalSeries y11();  // S e^(-2x) / (3 sqrt(x))
FormalSeries z20();  // e^(2x)/2
FormalSeries z21();  // -2 S e^x / (3 sqrt(x))
FormalSeries z2R0();

// The integrand of the regular part of z_{2,R} after the J-expansion
// (everything except the J^3 remainder and the 7S/36 term).
FormalSeries E_integrand();

// Products feeding the G_{0,4} decomposition; R0, R1 are the x^(-5/2) and
// x^(-3) parts of the residual.
FormalSeries T_product();
FormalSeries U_product();

}  // namespace p1cert::formal

#endif
