#ifndef P1CERT_FUNCTIONALS_CATALOG_HPP
#define P1CERT_FUNCTIONALS_CATALOG_HPP

#include <string>
#include <vector>

#include "p1cert/formal/tables.hpp"
#include "p1cert/functionals/power_sum.hpp"

namespace p1cert::functionals {

struct DerivedConstant {
  std::string name;
  Interval value;
  Rational rho;
};

// Names in catalog order: j_m, J_M, Y1M, Y1RM, E_M, z2RM, z2M, M_q, M_Lq,
// V_M, T_M, M_G1..M_G7 (plus M_G40, M_G41), M1..M7, sum_M.
const std::vector<std::string>& catalog_names();
// Names with a printed reference value at rho = 3.
const std::vector<std::string>& reference_names();

// Closed forms come from the shipped data file; composites are assembled
// from them. Throws std::out_of_range for an unknown name.
ConstantExpr build_constant(const std::string& name, const formal::AppendixData& data = formal::default_appendix());
PowerSum closed_form(const std::string& name, const formal::AppendixData& data = formal::default_appendix());
// |f| majorant: sum |c| |S|^k rho^(-j/2) over the terms of f, using |e^(-m x)| <= 1.
PowerSum abs_majorant(const formal::FormalSeries& f);

Interval eval_constant(const ConstantExpr& c, const Rational& rho);
DerivedConstant derive(const std::string& name, const Rational& rho,
                       const formal::AppendixData& data = formal::default_appendix());

// Does the enclosure pin down the printed digits? For a truncated value p
// with d decimals every point must lie in [p, p + 10^-d) (mirrored for
// p < 0); for a rounded one in [p - 10^-d/2, p + 10^-d/2].
bool matches_printed(const Interval& enclosure, const formal::PrintedValue& printed);
Interval printed_range(const formal::PrintedValue& printed);

}  // namespace p1cert::functionals

#endif
