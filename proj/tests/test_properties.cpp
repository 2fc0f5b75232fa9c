#include <doctest.h>

#include "property_suite.hpp"

TEST_CASE("randomised exact identities over 1000 polytopes") {
  const auto outcome = testing::run_property_suite(1000, 0xC05F);
  CHECK(outcome.cases == 1000);
  for (const auto& f : outcome.failures) FAIL_CHECK(f);
  CHECK(outcome.failures.empty());
}

TEST_CASE("a second seed") {
  const auto outcome = testing::run_property_suite(300, 12345);
  for (const auto& f : outcome.failures) FAIL_CHECK(f);
  CHECK(outcome.failures.empty());
}
