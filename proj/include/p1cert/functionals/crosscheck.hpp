#ifndef P1CERT_FUNCTIONALS_CROSSCHECK_HPP
#define P1CERT_FUNCTIONALS_CROSSCHECK_HPP

#include <string>
#include <vector>

#include "p1cert/formal/verify.hpp"
#include "p1cert/functionals/power_sum.hpp"

namespace p1cert::functionals {

// Names whose closed form is re-derived from F-functionals of the tables.
const std::vector<std::string>& derivable_names();

// The closed form rebuilt from the shipped tables, e.g.
// M_q = sum_{j=10..14} F1_j[q_{j-5}] rho^(-j/2 + 7/2).
PowerSum derive_closed_form(const std::string& name, const formal::AppendixData& data = formal::default_appendix());

// Compares every derived closed form with the shipped one, coefficient by
// coefficient, as polynomials in |S|, sqrt(2) and rho^(-1/2). Also checks
// j_m against its printed formula.
formal::TableCheckReport crosscheck_functional_tables(const formal::AppendixData& data = formal::default_appendix());

}  // namespace p1cert::functionals

#endif
