#ifndef MIRAHORIC_VERIFY_HPP
#define MIRAHORIC_VERIFY_HPP

// The verification battery: one suite per acceptance criterion. Every check
// is exact; suites with a time limit also record it as a check.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace mirahoric {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string expected;
  std::string computed;
};

struct SuiteResult {
  std::string suite;
  int criterion = 0;
  std::string description;
  std::vector<CheckResult> checks;
  double runtime_ms = 0;

  bool passed() const;
  std::size_t failures() const;
};

struct VerifyOptions {
  std::uint64_t seed = 20260415;
};

// Suite names in criterion order: cosets, gaussian, jordan, banal, kirillov,
// commute, basechange, level, degree, canonical.
const std::vector<std::string>& suite_names();

// Throws Error(InvalidArgument) for an unknown name.
SuiteResult run_suite(const std::string& name, const VerifyOptions& options = {});
std::vector<SuiteResult> run_suites(const std::string& name_or_all, const VerifyOptions& options = {});

// "[PASS] 1 cosets: ... (12 checks, 0.4 s)" plus one line per failing check.
std::string format_suite(const SuiteResult& result);
nlohmann::json suite_to_json(const SuiteResult& result);

}  // namespace mirahoric

#endif  // MIRAHORIC_VERIFY_HPP
