// One line per acceptance criterion; exit status is the number of failures.
#include <iostream>

#include "mirahoric/verify.hpp"

int main() {
  int failed = 0;
  for (const auto& result : mirahoric::run_suites("all")) {
    std::cout << mirahoric::format_suite(result) << std::flush;
    failed += !result.passed();
  }
  std::cout << (failed ? "acceptance: FAILED " : "acceptance: all passed ")
            << (10 - failed) << "/10\n";
  return failed;
}
