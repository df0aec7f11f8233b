#ifndef P1CERT_FUNCTIONALS_EXP_POLY_HPP
#define P1CERT_FUNCTIONALS_EXP_POLY_HPP

#include <map>
#include <utility>

#include "p1cert/formal/series.hpp"
#include "p1cert/numerics/interval.hpp"

namespace p1cert::functionals {

// P(zeta) = sum c_{m,k} S^k zeta^(-m), the coefficient polynomial of one
// x^(-j/2) slice of a table.
class ExpPoly {
 public:
  using Key = std::pair<int, int>;  // (m, k)

  ExpPoly() = default;
  // The x^(-j/2) slice of s.
  static ExpPoly from_series(const formal::FormalSeries& s, int j);

  void add(int m, int k, const Rational& c);
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  int min_m() const;  // smallest zeta^(-1) power present
  ExpPoly operator*(const Rational& c) const;
  ExpPoly operator+(const ExpPoly& o) const;
  // Drops the m = 0 term.
  ExpPoly without_constant() const;

 private:
  std::map<Key, Rational> terms_;
};

enum class FKind { F1, F2, F3, F4 };
const char* to_string(FKind k);

// Polynomial in |S|: power k -> coefficient.
using AbsSPoly = std::map<int, Rational>;

// The defining weighted sums with |p_m| <= sum_k |c_{m,k}| |S|^k:
//   F1 = 2/(j-2) sum |p_m|       F2 = sum 2/m |p_m|
//   F3 = 2/(j-3) sum |p_m|       F4 = sum (j^2+2j-2)/(j(j-1)m) |p_m|
// Throws DomainError when j or the smallest m violates the kind's
// precondition.
AbsSPoly f_functional_symbolic(FKind kind, const ExpPoly& p, const Rational& j);
Interval f_functional(FKind kind, const ExpPoly& p, const Rational& j);
Interval eval_abs_s_poly(const AbsSPoly& p);

}  // namespace p1cert::functionals

#endif
