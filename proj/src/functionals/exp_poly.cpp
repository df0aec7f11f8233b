#include "p1cert/functionals/exp_poly.hpp"

#include "p1cert/numerics/constants.hpp"

namespace p1cert::functionals {

ExpPoly ExpPoly::from_series(const formal::FormalSeries& s, int j) {
  ExpPoly p;
  for (const auto& [key, c] : s.terms())
    if (key.j == j) p.add(key.m, key.k, c);
  return p;
}

void ExpPoly::add(int m, int k, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{m, k}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int ExpPoly::min_m() const {
  int best = 0;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (first || key.first < best) best = key.first;
    first = false;
  }
  return best;
}

ExpPoly ExpPoly::operator*(const Rational& c) const {
  ExpPoly r;
  for (const auto& [key, v] : terms_) r.add(key.first, key.second, v * c);
  return r;
}

ExpPoly ExpPoly::operator+(const ExpPoly& o) const {
  ExpPoly r = *this;
  for (const auto& [key, v] : o.terms_) r.add(key.first, key.second, v);
  return r;
}

ExpPoly ExpPoly::without_constant() const {
  ExpPoly r;
  for (const auto& [key, v] : terms_)
    if (key.first != 0) r.add(key.first, key.second, v);
  return r;
}

const char* to_string(FKind k) {
  switch (k) {
    case FKind::F1: return "F1";
    case FKind::F2: return "F2";
    case FKind::F3: return "F3";
    case FKind::F4: return "F4";
  }
  return "?";
}

AbsSPoly f_functional_symbolic(FKind kind, const ExpPoly& p, const Rational& j) {
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw DomainError(std::string(to_string(kind)) + " precondition violated: " + what + " (j = " + j.str() + ")");
  };
  bool has_terms = !p.empty();
  switch (kind) {
    case FKind::F1: need(j > Rational(2), "j > 2"); break;
    case FKind::F3: need(j > Rational(3), "j > 3"); break;
    case FKind::F2: need(!has_terms || p.min_m() > 0, "m0 > 0"); break;
    case FKind::F4:
      need(j > Rational(1), "j > 1");
      need(!has_terms || p.min_m() > 0, "m0 > 0");
      break;
  }
  AbsSPoly out;
  for (const auto& [key, c] : p.terms()) {
    Rational m(key.first), w;
    switch (kind) {
      case FKind::F1: w = Rational(2) / (j - Rational(2)); break;
      case FKind::F2: w = Rational(2) / m; break;
      case FKind::F3: w = Rational(2) / (j - Rational(3)); break;
      case FKind::F4: w = (j * j + Rational(2) * j - Rational(2)) / (j * (j - Rational(1)) * m); break;
    }
    Rational& slot = out[key.second];
    slot += w * c.abs();
    if (slot.is_zero()) out.erase(key.second);
  }
  return out;
}

Interval eval_abs_s_poly(const AbsSPoly& p) {
  const Interval& s = constants().abs_s;
  Interval sum(0);
  for (const auto& [k, c] : p) sum += Interval(c) * s.pow(static_cast<unsigned>(k));
  return sum;
}

Interval f_functional(FKind kind, const ExpPoly& p, const Rational& j) {
  return eval_abs_s_poly(f_functional_symbolic(kind, p, j));
}

}  // namespace p1cert::functionals
