#include "p1cert/numerics/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

namespace p1cert {

namespace {

mpz_class pow10z(unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

mpz_class divide(const mpz_class& n, const mpz_class& d, Round r) {
  mpz_class q;
  switch (r) {
    case Round::down: mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t()); break;
    case Round::up: mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t()); break;
    case Round::nearest: {
      mpz_class twice = 2 * n + d;
      mpz_class den2 = 2 * d;
      mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), den2.get_mpz_t());
      break;
    }
  }
  return q;
}

// floor(log10 |x|) for x != 0.
int decimal_exponent(const mpq_class& x) {
  mpq_class a = abs(x);
  int e = static_cast<int>(std::floor(std::log10(a.get_num().get_d()) - std::log10(a.get_den().get_d())));
  if (!std::isfinite(a.get_num().get_d()) || !std::isfinite(a.get_den().get_d())) {
    e = static_cast<int>(mpz_sizeinbase(a.get_num().get_mpz_t(), 10)) -
        static_cast<int>(mpz_sizeinbase(a.get_den().get_mpz_t(), 10));
  }
  // The double estimate can be off by one near powers of ten.
  auto p10 = [](int k) {
    return k >= 0 ? mpq_class(pow10z(static_cast<unsigned>(k)))
                  : mpq_class(mpz_class(1), pow10z(static_cast<unsigned>(-k)));
  };
  while (p10(e) > a) --e;
  while (p10(e + 1) <= a) ++e;
  return e;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  s = s.substr(b);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpz_class n, d;
    if (n.set_str(s.substr(0, slash), 10) != 0 || d.set_str(s.substr(slash + 1), 10) != 0)
      throw std::invalid_argument("bad rational literal: " + s);
    return Rational(n, d);
  }

  std::string mant = s;
  long exp10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    mant = s.substr(0, epos);
    try {
      exp10 = std::stol(s.substr(epos + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad rational literal: " + s);
    }
  }
  auto dot = mant.find('.');
  if (dot != std::string::npos) {
    exp10 -= static_cast<long>(mant.size() - dot - 1);
    mant.erase(dot, 1);
  }
  if (mant == "" || mant == "-" || mant == "+") throw std::invalid_argument("bad rational literal: " + s);
  if (mant[0] == '+') mant.erase(0, 1);
  mpz_class n;
  if (n.set_str(mant, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (exp10 >= 0) return Rational(n * pow10z(static_cast<unsigned>(exp10)), mpz_class(1));
  return Rational(n, pow10z(static_cast<unsigned>(-exp10)));
}

Rational Rational::from_double(double d) {
  if (!std::isfinite(d)) throw DomainError("non-finite double");
  mpq_class q(d);
  return Rational(q);
}

Rational Rational::pow2(int e) {
  mpz_class p(1);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned>(e < 0 ? -e : e));
  return e >= 0 ? Rational(p, mpz_class(1)) : Rational(mpz_class(1), p);
}

Rational Rational::pow10(int e) {
  mpz_class p = pow10z(static_cast<unsigned>(e < 0 ? -e : e));
  return e >= 0 ? Rational(p, mpz_class(1)) : Rational(mpz_class(1), p);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::pow(int n) const {
  if (n < 0) return Rational(1) / pow(-n);
  mpz_class a, b;
  mpz_pow_ui(a.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned>(n));
  mpz_pow_ui(b.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned>(n));
  return Rational(a, b);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::fixed(int decimals, Round r) const {
  mpz_class scale = pow10z(static_cast<unsigned>(decimals));
  mpz_class q = divide(v_.get_num() * scale, v_.get_den(), r);
  bool neg = q < 0;
  std::string digits = mpz_class(::abs(q)).get_str();
  if (decimals > 0) {
    if (static_cast<int>(digits.size()) <= decimals)
      digits = std::string(static_cast<size_t>(decimals) + 1 - digits.size(), '0') + digits;
    digits.insert(digits.size() - static_cast<size_t>(decimals), ".");
  }
  return (neg ? "-" : "") + digits;
}

std::string Rational::sci(int digits, Round r) const {
  if (is_zero()) return "0";
  int e = decimal_exponent(v_);
  int shift = digits - 1 - e;
  mpq_class scaled = v_;
  if (shift >= 0)
    scaled *= pow10z(static_cast<unsigned>(shift));
  else
    scaled /= pow10z(static_cast<unsigned>(-shift));
  mpz_class q = divide(scaled.get_num(), scaled.get_den(), r);
  // Rounding may carry into a new digit (9.99 -> 10.0).
  std::string mag = mpz_class(::abs(q)).get_str();
  if (static_cast<int>(mag.size()) > digits) {
    ++e;
    mag.pop_back();
  }
  std::string out = q < 0 ? "-" : "";
  out += mag.substr(0, 1);
  if (digits > 1) out += "." + mag.substr(1);
  char buf[16];
  std::snprintf(buf, sizeof buf, "e%+03d", e);
  return out + buf;
}

Rational Rational::floor_dyadic(int bits) const {
  mpz_class scaled = v_.get_num();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<unsigned>(bits));
  mpz_class q = divide(scaled, v_.get_den(), Round::down);
  return Rational(q, mpz_class(1)) * pow2(-bits);
}

Rational Rational::ceil_dyadic(int bits) const {
  mpz_class scaled = v_.get_num();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<unsigned>(bits));
  mpz_class q = divide(scaled, v_.get_den(), Round::up);
  return Rational(q, mpz_class(1)) * pow2(-bits);
}

}  // namespace p1cert
