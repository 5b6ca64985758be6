#include <doctest.h>

#include <atomic>
#include <stdexcept>

#include "injwords/parallel.hpp"
#include "injwords/verify.hpp"

using namespace injwords;

TEST_CASE("parallel_for visits every index and rethrows the first failure") {
  std::vector<std::atomic<int>> hits(100);
  parallel_for(hits.size(), 3, [&](std::size_t i) { hits[i] += 1; });
  for (const auto& h : hits) CHECK(h == 1);
  CHECK_THROWS_WITH(parallel_for(10, 2, [](std::size_t i) {
                      if (i == 4 || i == 7) throw std::runtime_error("index " + std::to_string(i));
                    }),
                    "index 4");
}

TEST_CASE("reports keep check order and record exceptions as failures") {
  std::vector<CheckSpec> checks{
      {"a", "plumbing", "", [] { return CheckOutcome{true, "fine", std::nullopt}; }},
      {"b", "plumbing", "", []() -> CheckOutcome { throw std::runtime_error("boom"); }},
      {"c", "plumbing", "", [] { return CheckOutcome{true, "", -1}; }},
  };
  const auto report = run_checks("custom", 1, checks, 2);
  REQUIRE(report.checks.size() == 3);
  CHECK(report.checks[0].id == "a");
  CHECK(report.checks[1].detail == "exception: boom");
  CHECK_FALSE(report.passed());
  CHECK(report.failures() == 1);
  CHECK(report.resolved_sign == -1);
}

TEST_CASE("every suite passes at n_max = 4") {
  for (const auto& suite : suite_names()) {
    const auto report = run_suite(suite, 4, 1);
    CHECK_MESSAGE(report.passed(), suite);
    CHECK_FALSE(report.checks.empty());
  }
  CHECK_THROWS_AS(suite_checks("nonsense", 3), std::invalid_argument);
}

TEST_CASE("the shuffle suite records the cross-term sign") {
  const auto report = run_suite("shuffle", 5, default_jobs());
  CHECK(report.passed());
  CHECK(report.resolved_sign == -1);
}
