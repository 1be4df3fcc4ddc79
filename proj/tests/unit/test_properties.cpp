#include <doctest.h>

#include "property_checks.hpp"

TEST_CASE("invariant properties hold on random inputs") {
  for (const auto& r : traceclt::testing::run_property_suite(20250101, 200)) {
    INFO(r.name, " after ", r.cases, " cases: ", r.counterexample);
    CHECK(r.ok);
  }
}
