#include <set>

#include <doctest.h>

#include "transco/verify.hpp"

using namespace transco;

TEST_CASE("the shipped defaults pass every check") {
  const std::vector<CheckResult> results = run_verification(1e-10);
  CHECK(results.size() >= 20);
  std::set<std::string> names;
  for (const CheckResult& r : results) {
    INFO(r.name, " deviation ", r.deviation, " threshold ", r.threshold);
    CHECK(r.pass);
    names.insert(r.name);
  }
  CHECK(names.size() == results.size());  // names are unique
}

TEST_CASE("an impossible tolerance fails some checks") {
  const std::vector<CheckResult> results = run_verification(1e-16);
  bool any_fail = false;
  for (const CheckResult& r : results) any_fail = any_fail || !r.pass;
  CHECK(any_fail);
}

TEST_CASE("verification is deterministic") {
  const std::vector<CheckResult> a = run_verification(1e-10);
  const std::vector<CheckResult> b = run_verification(1e-10);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].deviation == b[i].deviation);
  }
}
