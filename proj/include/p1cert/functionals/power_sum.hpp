#ifndef P1CERT_FUNCTIONALS_POWER_SUM_HPP
#define P1CERT_FUNCTIONALS_POWER_SUM_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "p1cert/numerics/interval.hpp"

namespace p1cert::functionals {

// Enclosures needed to evaluate at one rho.
struct EvalContext {
  Interval rho;
  Interval inv_sqrt_rho;
  Interval abs_s;
  Interval sqrt2;
};
// pre: rho >= 1
EvalContext make_context(const Interval& rho);

// sum c * |S|^k * sqrt(2)^r * rho^(-e/2) with e >= 0, r in {0, 1}. The
// e = 0 terms form the constant part.
class PowerSum {
 public:
  struct Key {
    int e = 0;
    int k = 0;
    int r = 0;
    auto operator<=>(const Key&) const = default;
  };

  PowerSum() = default;
  PowerSum(const Rational& c);  // NOLINT: constants convert implicitly
  static PowerSum term(const Rational& c, int e, int k, int r = 0);

  void add(const Key& key, const Rational& c);
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  PowerSum& operator+=(const PowerSum& o);
  PowerSum& operator*=(const PowerSum& o);
  friend PowerSum operator+(PowerSum a, const PowerSum& b) { return a += b; }
  friend PowerSum operator*(PowerSum a, const PowerSum& b) { return a *= b; }
  friend bool operator==(const PowerSum& a, const PowerSum& b) { return a.terms_ == b.terms_; }

  Interval eval(const EvalContext& ctx) const;
  std::string str() const;

 private:
  std::map<Key, Rational> terms_;
};

// Every term with e > 0 has a nonnegative coefficient, so the sum is
// nonincreasing in rho.
bool monotone_check(const PowerSum& ps);

// Composite constants: sums and products of PowerSums plus 1/(1 - x).
class ConstantExpr {
 public:
  enum class Kind { leaf, sum, product, inv_one_minus };

  ConstantExpr() : ConstantExpr(PowerSum()) {}
  ConstantExpr(PowerSum ps);  // NOLINT
  ConstantExpr(const Rational& c) : ConstantExpr(PowerSum(c)) {}  // NOLINT
  static ConstantExpr inv_one_minus(const ConstantExpr& x);

  friend ConstantExpr operator+(const ConstantExpr& a, const ConstantExpr& b);
  friend ConstantExpr operator*(const ConstantExpr& a, const ConstantExpr& b);

  Kind kind() const { return node_->kind; }
  // Set for leaves, and for trees without inv_one_minus (expanded).
  const PowerSum* leaf() const { return node_->kind == Kind::leaf ? &node_->ps : nullptr; }
  bool expandable() const;
  PowerSum expand() const;  // pre: expandable()

  // Throws DomainError if an inv_one_minus argument is not certainly < 1.
  Interval eval(const EvalContext& ctx) const;
  // Structural decrease in rho: leaves have all coefficients >= 0 (so every
  // sub-expression is nonnegative and nonincreasing), and 1/(1 - x) keeps
  // that property where it is defined.
  bool monotone() const;
  std::string str() const;

 private:
  struct Node {
    Kind kind;
    PowerSum ps;
    std::vector<ConstantExpr> kids;
  };
  explicit ConstantExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace p1cert::functionals

#endif
