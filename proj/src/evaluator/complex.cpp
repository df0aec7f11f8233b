#include "p1cert/evaluator/complex.hpp"

#include <cmath>
#include <sstream>

namespace p1cert::evaluator {

void set_working_precision(unsigned bits) {
  if (bits < kMinPrecisionBits) bits = kMinPrecisionBits;
  // Boost counts decimal digits; round up so at least `bits` bits are kept.
  auto digits = static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
  Real::default_precision(digits);
}

namespace {
// Reals created before any explicit setting get the documented default.
[[maybe_unused]] const bool kDefaultApplied = (set_working_precision(kDefaultPrecisionBits), true);
}  // namespace

unsigned working_precision() {
  return static_cast<unsigned>(std::floor(Real::default_precision() / 0.30102999566398120));
}

Real pi() {
  Real p;
  mpfr_const_pi(p.backend().data(), MPFR_RNDN);
  return p;
}

ComplexValue ComplexValue::polar(const Real& r, const Real& theta) {
  return {r * boost::multiprecision::cos(theta), r * boost::multiprecision::sin(theta)};
}

ComplexValue& ComplexValue::operator+=(const ComplexValue& o) {
  re += o.re;
  im += o.im;
  return *this;
}

ComplexValue& ComplexValue::operator-=(const ComplexValue& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

ComplexValue& ComplexValue::operator*=(const ComplexValue& o) {
  Real r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

ComplexValue& ComplexValue::operator/=(const ComplexValue& o) {
  Real d = o.re * o.re + o.im * o.im;
  Real r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = std::move(r);
  return *this;
}

bool ComplexValue::finite() const {
  return boost::multiprecision::isfinite(re) && boost::multiprecision::isfinite(im);
}

ComplexValue i_unit() { return {Real(0), Real(1)}; }
Real abs(const ComplexValue& z) { return boost::multiprecision::hypot(z.re, z.im); }
Real arg(const ComplexValue& z) { return boost::multiprecision::atan2(z.im, z.re); }
ComplexValue conj(const ComplexValue& z) { return {z.re, -z.im}; }

ComplexValue exp(const ComplexValue& z) { return ComplexValue::polar(boost::multiprecision::exp(z.re), z.im); }

ComplexValue log(const ComplexValue& z) { return {boost::multiprecision::log(abs(z)), arg(z)}; }

ComplexValue sqrt(const ComplexValue& z) {
  Real r = abs(z);
  if (r == 0) return {};
  return ComplexValue::polar(boost::multiprecision::sqrt(r), arg(z) / 2);
}

ComplexValue pow(const ComplexValue& z, const Real& p) {
  if (abs(z) == 0) return {};
  return exp(ComplexValue(p) * log(z));
}

ComplexValue unit_root(int p, int q) { return ComplexValue::polar(Real(1), pi() * p / q); }

std::string to_string(const Real& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << std::scientific << x;
  return os.str();
}

std::string to_string(const ComplexValue& z, int digits) {
  std::string im = to_string(z.im, digits);
  return to_string(z.re, digits) + (im.front() == '-' ? " - " + im.substr(1) : " + " + im) + "i";
}

}  // namespace p1cert::evaluator
