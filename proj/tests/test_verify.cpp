#include "doctest.h"
#include "mirahoric/error.hpp"
#include "mirahoric/verify.hpp"

using namespace mirahoric;

TEST_CASE("suite registry") {
  CHECK(suite_names() == std::vector<std::string>{"cosets", "gaussian", "jordan", "banal",
                                                  "kirillov", "commute", "basechange", "level",
                                                  "degree", "canonical"});
  CHECK_THROWS_AS(run_suite("nonsense"), Error);
}

TEST_CASE("fast suites pass") {
  for (const char* name : {"gaussian", "commute", "level", "degree"}) {
    const SuiteResult r = run_suite(name);
    CHECK_MESSAGE(r.passed(), format_suite(r));
    CHECK(!r.checks.empty());
  }
}

TEST_CASE("seeded suites are reproducible") {
  VerifyOptions a, b;
  a.seed = b.seed = 42;
  const SuiteResult x = run_suite("commute", a), y = run_suite("commute", b);
  REQUIRE(x.checks.size() == y.checks.size());
  for (std::size_t i = 0; i < x.checks.size(); ++i) CHECK(x.checks[i].name == y.checks[i].name);
}

TEST_CASE("result formatting") {
  SuiteResult r{"demo", 3, "toy", {{"ok", CheckStatus::Pass, "1", "1"},
                                   {"bad", CheckStatus::Fail, "2", "5"}}, 12};
  CHECK(!r.passed());
  CHECK(r.failures() == 1);
  const std::string text = format_suite(r);
  CHECK(text.rfind("[FAIL] 3 demo", 0) == 0);
  CHECK(text.find("FAIL bad: expected 2, got 5") != std::string::npos);
  const auto j = suite_to_json(r);
  CHECK(j.at("passed") == false);
  CHECK(j.at("checks")[1].at("status") == "fail");
}
