#ifndef P1CERT_NUMERICS_CONSTANTS_HPP
#define P1CERT_NUMERICS_CONSTANTS_HPP

#include "p1cert/numerics/interval.hpp"

namespace p1cert {

// Stored rational bracket of pi, 39 decimals, width 1e-39.
Interval pi_enclosure();

struct Constants {
  Interval pi;
  Interval abs_s;   // |S| = sqrt(6/(5 pi))
  Interval abs_x0;  // |x0| = (24 * 17/10)^(5/4) / 30
  Interval sqrt2;
  Rational z0_modulus{17, 10};
};

// Built once on first use; immutable afterwards.
const Constants& constants();

}  // namespace p1cert

#endif
