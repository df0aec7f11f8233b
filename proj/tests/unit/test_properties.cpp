// Full-size property runs, with the sizes the acceptance binary uses.

#include "doctest.h"
#include "p1cert/evaluator/complex.hpp"
#include "suites.hpp"

using namespace p1cert;

TEST_CASE("interval containment, alternate seed") {
  testing::Outcome o = testing::interval_containment(10000, 7);
  INFO(o.detail);
  CHECK(o.pass);
}

TEST_CASE("Leibniz, 10^4 pairs") {
  testing::Outcome o = testing::leibniz(10000, 11);
  INFO(o.detail);
  CHECK(o.pass);
}

TEST_CASE("F homogeneity, 10^4 slices") {
  testing::Outcome o = testing::f_homogeneity(10000, 13);
  INFO(o.detail);
  CHECK(o.pass);
}

TEST_CASE("frame round trips at the minimum precision") {
  unsigned saved = evaluator::working_precision();
  evaluator::set_working_precision(evaluator::kMinPrecisionBits);
  testing::Outcome o = testing::frame_roundtrips(1000, 1e-25, 17);
  evaluator::set_working_precision(saved);
  INFO(o.detail);
  CHECK(o.pass);
}

TEST_CASE("the property harness catches a broken invariant") {
  testing::Outcome o;
  o.fail("first");
  o.fail("second");
  CHECK_FALSE(o.pass);
  CHECK(o.detail == "first");
}
