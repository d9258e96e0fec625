#include <doctest.h>

#include <cmath>

#include "dwt/validation.hpp"

using namespace dwt;

TEST_CASE("cross-validation suite passes") {
  const auto results = run_cross_validation(CheckOptions{});
  CHECK(results.size() == 12);
  for (const auto& r : results) {
    CAPTURE(r.name);
    CAPTURE(r.error);
    CHECK(r.passed);
    CHECK(r.error <= r.tolerance);
  }
  CHECK(all_passed(results));
  CHECK(format_check_table(results).find("12/12 checks passed") != std::string::npos);
}

TEST_CASE("strict halves tolerances") {
  CheckOptions loose;
  CheckOptions strict;
  strict.strict = true;
  const auto a = run_cross_validation(loose);
  const auto b = run_cross_validation(strict);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(b[i].tolerance == doctest::Approx(0.5 * a[i].tolerance));
}

TEST_CASE("failures are reported, not thrown") {
  std::vector<CheckResult> r(2);
  r[0].passed = true;
  CHECK_FALSE(all_passed(r));
  CHECK(format_check_table(r).find("1/2 checks passed") != std::string::npos);
}

TEST_CASE("revival locator") {
  std::vector<double> t, v;
  for (int i = 0; i <= 1000; ++i) {
    t.push_back(0.01 * i);
    v.push_back(5.0 + std::exp(-(t.back() - 7.0) * (t.back() - 7.0)));
  }
  CHECK(locate_revival(t, v, 5.0, 2.0, 9.0) == doctest::Approx(7.0));
  CHECK_THROWS(locate_revival(t, v, 5.0, 20.0, 30.0));
}
