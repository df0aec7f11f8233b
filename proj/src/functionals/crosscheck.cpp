#include "p1cert/functionals/crosscheck.hpp"

#include <set>
#include <stdexcept>

#include "p1cert/formal/quasi_solutions.hpp"
#include "p1cert/functionals/catalog.hpp"
#include "p1cert/functionals/exp_poly.hpp"

namespace p1cert::functionals {

const std::vector<std::string>& derivable_names() {
  static const std::vector<std::string> names{"E_M",   "M_q",  "M_Lq", "M_G1", "M_G2", "M_G3",
                                              "M_G40", "M_G41", "M_G5", "M_G6", "M_G7"};
  return names;
}

namespace {

// Adds scale * |S|^dk * rho^(-e/2) * f to ps.
void accumulate(PowerSum& ps, int e, const AbsSPoly& f, const Rational& scale = Rational(1), int dk = 0) {
  for (const auto& [k, c] : f) ps.add(PowerSum::Key{e, k + dk, 0}, c * scale);
}

AbsSPoly l1(const ExpPoly& p) {
  AbsSPoly out;
  for (const auto& [key, c] : p.terms()) out[key.second] += c.abs();
  return out;
}

}  // namespace

PowerSum derive_closed_form(const std::string& name, const formal::AppendixData& data) {
  auto slice = [&](const char* table, int j) { return ExpPoly::from_series(data.table(table), j); };
  auto F = [](FKind kind, const ExpPoly& p, int j) { return f_functional_symbolic(kind, p, Rational(j)); };
  PowerSum ps;
  if (name == "E_M") {
    for (int j = 5; j <= 8; ++j) accumulate(ps, j - 2, F(FKind::F2, slice("E", j), j));
  } else if (name == "M_q" || name == "M_Lq") {
    FKind kind = name == "M_q" ? FKind::F1 : FKind::F3;
    for (int j = 10; j <= 14; ++j) accumulate(ps, j - 7, F(kind, slice("q", j - 5), j));
  } else if (name == "M_G1") {
    ExpPoly r7 = slice("r", 7);
    ps.add(PowerSum::Key{0, 0, 1}, Rational(784, 3125));
    accumulate(ps, 0, F(FKind::F1, r7 + r7.without_constant(), 7));
    for (int j = 8; j <= 9; ++j) accumulate(ps, j - 7, F(FKind::F1, slice("r", j), j), Rational(2));
  } else if (name == "M_G2" || name == "M_G3") {
    for (int j = 7; j <= 8; ++j) accumulate(ps, j - 7, F(FKind::F1, slice("r", j - 2), j));
    if (name == "M_G3")
      for (int j = 5; j <= 6; ++j) accumulate(ps, j - 5, F(FKind::F1, slice("r", j), j));
  } else if (name == "M_G40") {
    for (int j = 5; j <= 8; ++j) accumulate(ps, j - 5, l1(slice("p", j)));
  } else if (name == "M_G41") {
    // (1/2 + 2|S|/(3 sqrt(rho))) sum_{j=7..9} rho^(-j/2+7/2) F1_j[ttilde_j]
    //   + sum_{j=7..10} rho^(-j/2+7/2) F1_j[utilde_j]
    for (int j = 7; j <= 9; ++j) {
      AbsSPoly f = F(FKind::F1, slice("ttilde", j), j);
      accumulate(ps, j - 7, f, Rational(1, 2));
      accumulate(ps, j - 6, f, Rational(2, 3), 1);
    }
    for (int j = 7; j <= 10; ++j) accumulate(ps, j - 7, F(FKind::F1, slice("utilde", j), j));
  } else if (name == "M_G5") {
    for (int j = 7; j <= 9; ++j) accumulate(ps, j - 7, F(FKind::F3, slice("r", j), j));
  } else if (name == "M_G6") {
    for (int j = 7; j <= 8; ++j) accumulate(ps, j - 7, F(FKind::F3, slice("r", j - 2), j));
  } else if (name == "M_G7") {
    for (int j = 5; j <= 7; ++j) accumulate(ps, j - 5, F(FKind::F4, slice("t", j), j));
  } else {
    throw std::out_of_range("no F-functional derivation for '" + name + "'");
  }
  return ps;
}

namespace {

std::string key_str(const PowerSum::Key& k) {
  std::string s = "|S|^" + std::to_string(k.k);
  if (k.r) s += " sqrt2";
  return s + " rho^(-" + std::to_string(k.e) + "/2)";
}

formal::CheckItem compare(const std::string& desc, const PowerSum& derived, const PowerSum& shipped) {
  formal::CheckItem item{desc, true, ""};
  std::set<PowerSum::Key> keys;
  for (const auto& [k, v] : derived.terms()) keys.insert(k);
  for (const auto& [k, v] : shipped.terms()) keys.insert(k);
  for (const auto& k : keys) {
    auto a = derived.terms().find(k), b = shipped.terms().find(k);
    Rational av = a == derived.terms().end() ? Rational(0) : a->second;
    Rational bv = b == shipped.terms().end() ? Rational(0) : b->second;
    if (av == bv) continue;
    item.pass = false;
    if (!item.detail.empty()) item.detail += "; ";
    item.detail += "term " + key_str(k) + ": closed form " + bv.str() + ", from functionals " + av.str();
  }
  return item;
}

}  // namespace

formal::TableCheckReport crosscheck_functional_tables(const formal::AppendixData& data) {
  formal::TableCheckReport rep{"crosscheck_functional_tables", {}};
  for (const auto& n : derivable_names()) {
    try {
      rep.items.push_back(compare(n + " closed form equals its F-functional sum", derive_closed_form(n, data),
                                  closed_form(n, data)));
    } catch (const std::exception& e) {
      rep.items.push_back({n + " closed form equals its F-functional sum", false, e.what()});
    }
  }
  // j_m as printed: 3|S|/16 + 19/(24 sqrt rho) + |S|^2/(36 sqrt rho) + 5|S|/(16 rho) + 25|S|^3/(6912 rho)
  PowerSum jm = PowerSum::term(Rational(3, 16), 0, 1) + PowerSum::term(Rational(19, 24), 1, 0) +
                PowerSum::term(Rational(1, 36), 1, 2) + PowerSum::term(Rational(5, 16), 2, 1) +
                PowerSum::term(Rational(25, 6912), 2, 3);
  rep.items.push_back(compare("j_m majorant of j(x) equals its printed bound", abs_majorant(formal::j_aux()), jm));
  return rep;
}

}  // namespace p1cert::functionals
