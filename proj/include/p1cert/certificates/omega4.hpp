#ifndef P1CERT_CERTIFICATES_OMEGA4_HPP
#define P1CERT_CERTIFICATES_OMEGA4_HPP

#include "p1cert/certificates/report.hpp"
#include "p1cert/formal/tables.hpp"

namespace p1cert::certificates {

// Theorem-level checks for Omega_4 = {|x| >= rho, arg x in [-pi/2, -pi/4]}.
// rho < 3 is reported as a precondition violation, not evaluated.
CertificateReport check_omega_4(const Rational& rho, const formal::AppendixData& data = formal::default_appendix());

}  // namespace p1cert::certificates

#endif
