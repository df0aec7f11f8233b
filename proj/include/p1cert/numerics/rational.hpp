#ifndef P1CERT_NUMERICS_RATIONAL_HPP
#define P1CERT_NUMERICS_RATIONAL_HPP

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace p1cert {

// Raised when an operation's mathematical precondition fails (division by an
// interval containing zero, even root of a negative number, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

enum class Round { down, up, nearest };

// Exact rational backed by GMP; always canonical (gcd 1, positive denominator).
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT: implicit on purpose
  Rational(long num, long den);
  explicit Rational(mpq_class v);
  Rational(const mpz_class& num, const mpz_class& den);

  // Accepts "p/q", integers and plain decimals with an optional exponent
  // ("0.61804", "-1.5e-3").
  static Rational parse(std::string_view text);
  static Rational from_double(double d);  // exact binary value of d
  static Rational pow2(int e);
  static Rational pow10(int e);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  Rational abs() const;
  Rational pow(int n) const;
  double to_double() const { return v_.get_d(); }

  // "p/q" (or "p" for integers).
  std::string str() const;
  // Fixed notation with `decimals` digits after the point, rounded as asked.
  std::string fixed(int decimals, Round r = Round::nearest) const;
  // Scientific notation with `digits` significant digits, rounded as asked.
  std::string sci(int digits, Round r = Round::nearest) const;

  // Dyadic rounding to a multiple of 2^-bits.
  Rational floor_dyadic(int bits) const;
  Rational ceil_dyadic(int bits) const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_{0};
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace p1cert

#endif
