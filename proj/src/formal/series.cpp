#include "p1cert/formal/series.hpp"

namespace p1cert::formal {

std::string describe(const TermKey& t) {
  std::string s = "S^" + std::to_string(t.k) + " x^(";
  s += t.j % 2 == 0 ? std::to_string(-t.j / 2) : std::to_string(-t.j) + "/2";
  s += ") e^(" + std::to_string(-t.m) + "x)";
  return s;
}

FormalSeries FormalSeries::monomial(const Rational& c, int k, int j, int m) {
  FormalSeries f;
  f.add_term(TermKey{k, j, m}, c);
  return f;
}

Rational FormalSeries::coeff(const TermKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FormalSeries::add_term(const TermKey& key, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FormalSeries FormalSeries::restrict_j(int j) const {
  FormalSeries f;
  for (const auto& [key, c] : terms_)
    if (key.j == j) f.terms_.emplace(key, c);
  return f;
}

std::set<int> FormalSeries::j_values() const {
  std::set<int> out;
  for (const auto& [key, c] : terms_) out.insert(key.j);
  return out;
}

FormalSeries FormalSeries::shift_j(int dj) const {
  FormalSeries f;
  for (const auto& [key, c] : terms_) f.terms_.emplace(TermKey{key.k, key.j + dj, key.m}, c);
  return f;
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  return *this;
}

FormalSeries& FormalSeries::operator-=(const FormalSeries& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, -c);
  return *this;
}

FormalSeries& FormalSeries::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
  FormalSeries r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term(TermKey{ka.k + kb.k, ka.j + kb.j, ka.m + kb.m}, ca * cb);
  return r;
}

std::string FormalSeries::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [key, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ") " + describe(key);
  }
  return s;
}

FormalSeries differentiate(const FormalSeries& a) {
  FormalSeries d;
  for (const auto& [key, c] : a.terms()) {
    if (key.j != 0) d.add_term(TermKey{key.k, key.j + 2, key.m}, -Rational(key.j, 2) * c);
    if (key.m != 0) d.add_term(key, -Rational(key.m) * c);
  }
  return d;
}

FormalSeries power(const FormalSeries& a, unsigned n) {
  FormalSeries r = FormalSeries::constant(Rational(1));
  for (unsigned i = 0; i < n; ++i) r = r * a;
  return r;
}

}  // namespace p1cert::formal
