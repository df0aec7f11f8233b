#include "p1cert/polybound/poly.hpp"

namespace p1cert::polybound {

Poly::Poly(std::vector<Rational> coeffs, Rational basepoint) : c_(std::move(coeffs)), base_(std::move(basepoint)) {
  trim();
}

Poly Poly::constant(const Rational& c, const Rational& basepoint) { return Poly({c}, basepoint); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<size_t>(k)];
}

Rational Poly::eval_local(const Rational& s) const {
  Rational r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * s + *it;
  return r;
}

Interval Poly::eval_local(const Interval& s) const {
  Interval r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * s + Interval(*it);
  return r;
}

double Poly::eval_double(double t) const {
  double s = t - base_.to_double(), r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * s + it->to_double();
  return r;
}

Poly Poly::rebased(const Rational& new_base) const {
  if (new_base == base_) return *this;
  return taylor_shift(*this, new_base - base_);
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) base_ = o.base_;
  const Poly& b = o.base_ == base_ ? o : o.rebased(base_);
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size());
  for (size_t k = 0; k < b.c_.size(); ++k) c_[k] += b.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  const Poly& b = o.base_ == base_ ? o : o.rebased(base_);
  std::vector<Rational> r(c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += c_[i] * b.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  for (auto& x : c_) x *= c;
  trim();
  return *this;
}

std::string Poly::str() const {
  std::string out;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c_[k].str() + ")";
    if (k > 0) out += "*s^" + std::to_string(k);
  }
  if (out.empty()) out = "0";
  return out + "  [s = t - (" + base_.str() + ")]";
}

Poly differentiate(const Poly& p) {
  std::vector<Rational> d;
  for (int k = 1; k <= p.degree(); ++k) d.push_back(p.coeff(k) * Rational(k));
  return Poly(std::move(d), p.basepoint());
}

Poly taylor_shift(const Poly& p, const Rational& c) {
  // Horner in the shifted variable: q <- q*(u + c) + p_k.
  std::vector<Rational> q(p.coeffs().size());
  for (int k = p.degree(); k >= 0; --k) {
    for (size_t i = q.size() - 1; i > 0; --i) q[i] = q[i] * c + q[i - 1];
    q[0] = q[0] * c + p.coeff(k);
  }
  return Poly(std::move(q), p.basepoint() + c);
}

Poly compose_affine(const Poly& p, const Rational& a, const Rational& b) {
  Poly shifted = taylor_shift(p, b);
  std::vector<Rational> q = shifted.coeffs();
  Rational ak(1);
  for (auto& x : q) {
    x *= ak;
    ak *= a;
  }
  return Poly(std::move(q));
}

Rational l1_norm(const Poly& p, const Rational& lo, const Rational& hi) {
  Rational m = max(lo.abs(), hi.abs()), mk(1), sum(0);
  for (const auto& c : p.coeffs()) {
    sum += c.abs() * mk;
    mk *= m;
  }
  return sum;
}

}  // namespace p1cert::polybound
