#include "p1cert/certificates/omega4.hpp"

#include "p1cert/functionals/catalog.hpp"
#include "p1cert/functionals/crosscheck.hpp"
#include "p1cert/numerics/constants.hpp"

namespace p1cert::certificates {

namespace fn = functionals;

CertificateReport check_omega_4(const Rational& rho, const formal::AppendixData& data) {
  CertificateReport r;
  r.name = "omega_4";
  r.input("rho", rho.str());
  r.input("tables", data.source);
  r.input("tables_sha256", data.sha256);
  if (rho < Rational(3)) {
    r.precondition_violation = "Omega_4 bounds need rho >= 3, got " + rho.str();
    return r;
  }

  formal::TableCheckReport cross = fn::crosscheck_functional_tables(data);
  for (const auto& item : cross.items)
    r.check_flag(item.desc + (item.detail.empty() ? "" : " (" + item.detail + ")"), item.pass);

  // Everything is evaluated at rho itself; the monotone flags make that a
  // bound for every larger |x| as well.
  for (const char* name : {"V_M", "T_M", "sum_M"})
    r.check_flag(std::string(name) + " is nonincreasing in rho", fn::build_constant(name, data).monotone());

  auto value = [&](const std::string& n) { return fn::derive(n, rho, data).value; };
  Interval vm = value("V_M"), tm = value("T_M"), sum = value("sum_M");
  r.check("V_M <= 9/40", vm, Relation::le, Interval(Rational(9, 40)));
  r.check("9/40 <= 1/4 (linear term)", Interval(Rational(9, 40)), Relation::le,
          Interval(Rational(1, 4)));
  r.check("T_M <= 18/467", tm, Relation::le, Interval(Rational(18, 467)));
  r.check("18/467 < 1/25 (quadratic term)", Interval(Rational(18, 467)), Relation::lt, Interval(Rational(1, 25)));
  r.check("||G_0|| <= M1 + ... + M7 <= 2", sum, Relation::le, Interval(2));

  // N maps B_4 into itself and contracts.
  Interval image = Interval(2) + Interval(Rational(1, 4)) * Interval(4) + Interval(Rational(1, 25)) * Interval(16);
  r.check("2 + 4/4 + 16/25 < 4", image, Relation::lt, Interval(4));
  Interval factor = Interval(Rational(1, 4)) + Interval(Rational(1, 25)) * Interval(8);
  r.check("1/4 + 8/25 <= 3/4", factor, Relation::le, Interval(Rational(3, 4)));

  if (rho == Rational(3)) {
    for (const auto& n : fn::reference_names())
      r.check(n + " at rho = 3 matches " + data.value(n).text, value(n), Relation::within,
              fn::printed_range(data.value(n)));
    r.check("|S| = sqrt(6/(5 pi)) matches " + data.value("abs_S").text, constants().abs_s, Relation::within,
            fn::printed_range(data.value("abs_S")));
  }
  r.notes.push_back("contraction factor 57/100; ball radius 4");
  r.notes.push_back("assumption, not checked: the Omega_4 solution with h ~ S e^{-x} x^{-1/2} is the tritronquee (C = S)");
  return r;
}

}  // namespace p1cert::certificates
