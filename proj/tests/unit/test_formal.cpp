#include "doctest.h"
#include "p1cert/data/data_files.hpp"
#include "p1cert/formal/quasi_solutions.hpp"
#include "p1cert/formal/tables.hpp"
#include "p1cert/formal/verify.hpp"
#include "suites.hpp"

using namespace p1cert;
using namespace p1cert::formal;

namespace {

FormalSeries mono(long p, long q, int k, int j, int m) { return FormalSeries::monomial(Rational(p, q), k, j, m); }

}  // namespace

TEST_CASE("formal ring basics") {
  FormalSeries a = mono(1, 2, 1, 1, 1) + mono(3, 1, 0, 0, 0);
  FormalSeries b = mono(-1, 3, 0, 2, -1);
  FormalSeries ab = a * b;
  CHECK(ab.coeff(1, 3, 0) == Rational(-1, 6));
  CHECK(ab.coeff(0, 2, -1) == Rational(-1));
  CHECK((a - a).is_zero());
  CHECK(power(b, 3) == b * b * b);
  CHECK(a.restrict_j(1) == mono(1, 2, 1, 1, 1));
  CHECK(a.j_values() == std::set<int>{0, 1});
  CHECK(a.shift_j(2).coeff(1, 3, 1) == Rational(1, 2));
  // d/dx x^(-j/2) e^(-mx)
  FormalSeries d = differentiate(mono(1, 1, 0, 3, 2));
  CHECK(d.coeff(0, 5, 2) == Rational(-3, 2));
  CHECK(d.coeff(0, 3, 2) == Rational(-2));
  CHECK(d.size() == 2);
  CHECK(differentiate(FormalSeries::constant(Rational(7))).is_zero());
  CHECK(describe(TermKey{2, 3, -1}).find("S^2") != std::string::npos);
}

TEST_CASE("exp antiderivative inverts the e^(-mx) part of d/dx") {
  FormalSeries f = mono(5, 7, 1, 4, 2) + mono(-1, 3, 2, 6, -1);
  FormalSeries F = exp_antiderivative(f);
  // d/dx F = f + the x-power part, which is one half-step lower.
  FormalSeries rest = differentiate(F) - f;
  for (const auto& [key, c] : rest.terms()) CHECK(key.j >= 6);
  CHECK_THROWS(exp_antiderivative(mono(1, 1, 0, 3, 0)));
}

TEST_CASE("quasi-solution h0 and its residual") {
  FormalSeries h = h0();
  // Leading term xi = S x^(-1/2) e^(-x).
  CHECK(h.coeff(1, 1, 1) == Rational(1));
  CHECK(h.coeff(2, 2, 2) == Rational(1, 6));
  FormalSeries R = residual_R();
  CHECK(*R.j_values().begin() == 5);
  CHECK(*R.j_values().rbegin() == 9);
  CHECK(R.coeff(0, 7, 0) == Rational(-392, 625));
  CHECK(xi() == mono(1, 1, 1, 1, 1));
}

TEST_CASE("shipped table file parses and matches its recorded hash") {
  const AppendixData& d = default_appendix();
  CHECK(d.sha256.rfind("27ace1e8", 0) == 0);
  CHECK(d.tables.size() == 10);
  CHECK(d.value("M6").text == "0.00231");
  CHECK(d.value("M6").truncated);
  CHECK_THROWS(d.value("nope"));
  CHECK_THROWS(parse_appendix("value X 0.1 sideways\n"));
  CHECK_THROWS(parse_appendix("frobnicate 1 2 3\n"));
}

TEST_CASE("symbolic table suites pass with exact equality") {
  for (const TableCheckReport& r : verify_all_tables()) {
    INFO(r.name);
    for (const auto* f : r.failures()) INFO(f->desc << ": " << f->detail);
    CHECK(r.pass());
    CHECK_FALSE(r.items.empty());
  }
}

TEST_CASE("majorant identity against a direct sum") {
  for (int k = 0; k <= 200; ++k) {
    long s = 0;
    for (int j = 0; j <= k; ++j) s += static_cast<long>(j + 1) * (k - j + 1);
    CHECK(s * 6 == static_cast<long>(k + 1) * (k + 2) * (k + 3));
    CHECK(majorant_identity_holds(k));
  }
}

TEST_CASE("property: Leibniz rule on the formal ring") {
  testing::Outcome o = testing::leibniz(2000);
  INFO(o.detail);
  CHECK(o.pass);
}
