#ifndef P1CERT_FORMAL_SERIES_HPP
#define P1CERT_FORMAL_SERIES_HPP

#include <compare>
#include <map>
#include <set>
#include <string>

#include "p1cert/numerics/rational.hpp"

namespace p1cert::formal {

// Monomial S^k x^(-j/2) e^(-m x). j and m may be negative; k >= 0.
struct TermKey {
  int k = 0;
  int j = 0;
  int m = 0;
  auto operator<=>(const TermKey&) const = default;
};

std::string describe(const TermKey& t);

// Finite element of Q[S][x^(-1/2), x^(1/2), e^(-x), e^(x)].
class FormalSeries {
 public:
  using Map = std::map<TermKey, Rational>;

  FormalSeries() = default;
  static FormalSeries monomial(const Rational& c, int k, int j, int m);
  static FormalSeries constant(const Rational& c) { return monomial(c, 0, 0, 0); }

  const Map& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const TermKey& key) const;
  Rational coeff(int k, int j, int m) const { return coeff(TermKey{k, j, m}); }
  void add_term(const TermKey& key, const Rational& c);

  // Terms with the given x-exponent index j.
  FormalSeries restrict_j(int j) const;
  std::set<int> j_values() const;
  // Shifts every x-exponent index by dj (multiplication by x^(-dj/2)).
  FormalSeries shift_j(int dj) const;

  FormalSeries& operator+=(const FormalSeries& o);
  FormalSeries& operator-=(const FormalSeries& o);
  FormalSeries& operator*=(const Rational& c);

  friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
  friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) { return a -= b; }
  friend FormalSeries operator*(FormalSeries a, const Rational& c) { return a *= c; }
  friend FormalSeries operator*(const Rational& c, FormalSeries a) { return a *= c; }
  friend FormalSeries operator-(FormalSeries a) { return a *= Rational(-1); }
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);
  friend bool operator==(const FormalSeries& a, const FormalSeries& b) { return a.terms_ == b.terms_; }

  std::string str() const;

 private:
  Map terms_;
};

// d/dx: S^k x^(-j/2) e^(-m x) -> -(j/2) S^k x^(-j/2-1) e^(-m x) - m S^k x^(-j/2) e^(-m x)
FormalSeries differentiate(const FormalSeries& a);
FormalSeries power(const FormalSeries& a, unsigned n);

// Shorthands: x^(-j/2), e^(-m x).
inline FormalSeries x_pow(int j) { return FormalSeries::monomial(Rational(1), 0, j, 0); }
inline FormalSeries e_pow(int m) { return FormalSeries::monomial(Rational(1), 0, 0, m); }

}  // namespace p1cert::formal

#endif
