#ifndef P1CERT_EVALUATOR_COMPLEX_HPP
#define P1CERT_EVALUATOR_COMPLEX_HPP

#include <string>

#include <boost/multiprecision/mpfr.hpp>

namespace p1cert::evaluator {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

inline constexpr unsigned kDefaultPrecisionBits = 128;
inline constexpr unsigned kMinPrecisionBits = 100;

// Sets the precision of every Real created afterwards. Boost keeps this in a
// process-wide static: call it before starting worker threads.
void set_working_precision(unsigned bits);
unsigned working_precision();

Real pi();

struct ComplexValue {
  Real re{0}, im{0};

  ComplexValue() = default;
  ComplexValue(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}  // NOLINT
  ComplexValue(double r, double i = 0) : re(r), im(i) {}                            // NOLINT
  static ComplexValue polar(const Real& r, const Real& theta);

  ComplexValue& operator+=(const ComplexValue& o);
  ComplexValue& operator-=(const ComplexValue& o);
  ComplexValue& operator*=(const ComplexValue& o);
  ComplexValue& operator/=(const ComplexValue& o);
  friend ComplexValue operator+(ComplexValue a, const ComplexValue& b) { return a += b; }
  friend ComplexValue operator-(ComplexValue a, const ComplexValue& b) { return a -= b; }
  friend ComplexValue operator*(ComplexValue a, const ComplexValue& b) { return a *= b; }
  friend ComplexValue operator/(ComplexValue a, const ComplexValue& b) { return a /= b; }
  friend ComplexValue operator-(const ComplexValue& a) { return {-a.re, -a.im}; }

  bool finite() const;
};

ComplexValue i_unit();
Real abs(const ComplexValue& z);
Real arg(const ComplexValue& z);  // in (-pi, pi]
ComplexValue conj(const ComplexValue& z);
ComplexValue exp(const ComplexValue& z);
ComplexValue log(const ComplexValue& z);  // principal branch
ComplexValue sqrt(const ComplexValue& z);  // principal branch
ComplexValue pow(const ComplexValue& z, const Real& p);  // exp(p log z)
// e^{i pi p/q}
ComplexValue unit_root(int p, int q);

std::string to_string(const Real& x, int digits = 20);
std::string to_string(const ComplexValue& z, int digits = 20);

}  // namespace p1cert::evaluator

#endif
