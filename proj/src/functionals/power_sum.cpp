#include "p1cert/functionals/power_sum.hpp"

#include <algorithm>

#include "p1cert/numerics/constants.hpp"

namespace p1cert::functionals {

EvalContext make_context(const Interval& rho) {
  if (rho.lo() < Rational(1)) throw DomainError("rho must be >= 1");
  const Constants& c = constants();
  Interval sq = sqrt(rho, Rational::pow10(-36));
  return EvalContext{rho, Interval(1) / sq, c.abs_s, c.sqrt2};
}

PowerSum::PowerSum(const Rational& c) { add(Key{0, 0, 0}, c); }

PowerSum PowerSum::term(const Rational& c, int e, int k, int r) {
  PowerSum p;
  p.add(Key{e, k, r}, c);
  return p;
}

void PowerSum::add(const Key& key, const Rational& c) {
  if (key.e < 0 || key.k < 0 || key.r < 0 || key.r > 1) throw DomainError("PowerSum term out of range");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PowerSum& PowerSum::operator+=(const PowerSum& o) {
  for (const auto& [k, v] : o.terms_) add(k, v);
  return *this;
}

PowerSum& PowerSum::operator*=(const PowerSum& o) {
  PowerSum r;
  for (const auto& [a, va] : terms_)
    for (const auto& [b, vb] : o.terms_) {
      int rr = a.r + b.r;
      Rational c = va * vb;
      if (rr == 2) {  // sqrt(2)^2
        rr = 0;
        c *= Rational(2);
      }
      r.add(Key{a.e + b.e, a.k + b.k, rr}, c);
    }
  terms_ = std::move(r.terms_);
  return *this;
}

Interval PowerSum::eval(const EvalContext& ctx) const {
  Interval sum(0);
  for (const auto& [key, c] : terms_) {
    Interval t = Interval(c) * ctx.abs_s.pow(static_cast<unsigned>(key.k)) * ctx.inv_sqrt_rho.pow(static_cast<unsigned>(key.e));
    if (key.r == 1) t *= ctx.sqrt2;
    sum += t;
  }
  return sum;
}

std::string PowerSum::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [key, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")";
    if (key.k) s += "*|S|^" + std::to_string(key.k);
    if (key.r) s += "*sqrt2";
    if (key.e) s += "*rho^(-" + std::to_string(key.e) + "/2)";
  }
  return s;
}

bool monotone_check(const PowerSum& ps) {
  return std::all_of(ps.terms().begin(), ps.terms().end(),
                     [](const auto& kv) { return kv.first.e == 0 || kv.second.sign() >= 0; });
}

ConstantExpr::ConstantExpr(PowerSum ps)
    : node_(std::make_shared<const Node>(Node{Kind::leaf, std::move(ps), {}})) {}

ConstantExpr ConstantExpr::inv_one_minus(const ConstantExpr& x) {
  return ConstantExpr(std::make_shared<const Node>(Node{Kind::inv_one_minus, {}, {x}}));
}

ConstantExpr operator+(const ConstantExpr& a, const ConstantExpr& b) {
  if (a.leaf() && b.leaf()) return ConstantExpr(*a.leaf() + *b.leaf());
  using N = ConstantExpr::Node;
  return ConstantExpr(std::make_shared<const N>(N{ConstantExpr::Kind::sum, {}, {a, b}}));
}

ConstantExpr operator*(const ConstantExpr& a, const ConstantExpr& b) {
  if (a.leaf() && b.leaf()) return ConstantExpr(*a.leaf() * *b.leaf());
  using N = ConstantExpr::Node;
  return ConstantExpr(std::make_shared<const N>(N{ConstantExpr::Kind::product, {}, {a, b}}));
}

bool ConstantExpr::expandable() const {
  if (node_->kind == Kind::inv_one_minus) return false;
  return std::all_of(node_->kids.begin(), node_->kids.end(), [](const ConstantExpr& k) { return k.expandable(); });
}

PowerSum ConstantExpr::expand() const {
  switch (node_->kind) {
    case Kind::leaf: return node_->ps;
    case Kind::sum: return node_->kids[0].expand() + node_->kids[1].expand();
    case Kind::product: return node_->kids[0].expand() * node_->kids[1].expand();
    case Kind::inv_one_minus: break;
  }
  throw DomainError("expression with 1/(1 - x) has no finite power-sum expansion");
}

Interval ConstantExpr::eval(const EvalContext& ctx) const {
  switch (node_->kind) {
    case Kind::leaf: return node_->ps.eval(ctx);
    case Kind::sum: return node_->kids[0].eval(ctx) + node_->kids[1].eval(ctx);
    case Kind::product: return node_->kids[0].eval(ctx) * node_->kids[1].eval(ctx);
    case Kind::inv_one_minus: {
      Interval x = node_->kids[0].eval(ctx);
      if (!(x.hi() < Rational(1))) throw DomainError("1/(1 - x) with x not certainly below 1");
      return Interval(1) / (Interval(1) - x);
    }
  }
  throw DomainError("bad expression node");
}

bool ConstantExpr::monotone() const {
  if (node_->kind == Kind::leaf)
    return std::all_of(node_->ps.terms().begin(), node_->ps.terms().end(),
                       [](const auto& kv) { return kv.second.sign() >= 0; });
  return std::all_of(node_->kids.begin(), node_->kids.end(), [](const ConstantExpr& k) { return k.monotone(); });
}

std::string ConstantExpr::str() const {
  switch (node_->kind) {
    case Kind::leaf: return "[" + node_->ps.str() + "]";
    case Kind::sum: return "(" + node_->kids[0].str() + " + " + node_->kids[1].str() + ")";
    case Kind::product: return node_->kids[0].str() + " * " + node_->kids[1].str();
    case Kind::inv_one_minus: return "1/(1 - " + node_->kids[0].str() + ")";
  }
  return "?";
}

}  // namespace p1cert::functionals
