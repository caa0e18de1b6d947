#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uqpa/appendix.hpp"

using namespace uqpa;

TEST_CASE("appendix suite") {
  for (int p : {2, 3}) {
    Field f(p);
    auto checks = appendix_suite(f);
    CHECK(checks.size() > 10);
    for (const auto& c : checks) CHECK_MESSAGE(c.holds, (c.name + ": " + c.detail));
    CHECK(all_hold(checks));
  }
}

TEST_CASE("single-step coproduct power") {
  Field f(3);
  CHECK(coproduct_power_check(f, 1, 1, 1).holds);
  CHECK(coproduct_power_check(f, 2, 2, 2).holds);
}

TEST_CASE("all_hold") {
  CHECK(all_hold({}));
  CHECK_FALSE(all_hold({{"a", true, ""}, {"b", false, "x"}}));
}
