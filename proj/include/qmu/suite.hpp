#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qmu {

enum class SuiteLevel { kQuick, kFull };
enum class CheckStatus { kPass, kFail, kSkipped };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  std::string description;
  std::string property;  // the mathematical statement being reproduced
  CheckStatus status = CheckStatus::kSkipped;
  double seconds = 0;
  std::string detail;
};

struct SuiteReport {
  std::vector<CheckResult> checks;

  bool passed() const;  // no check failed
};

struct SuiteOptions {
  SuiteLevel level = SuiteLevel::kFull;
  std::uint64_t seed = 7;
  int samples = 1000;
  int threads = 1;
  // Extra witness files to re-check; each becomes its own check.
  std::vector<std::string> witness_files;
};

SuiteReport run_suite(const SuiteOptions& options);

// One line per check: "PASS C1 (0.01s) description: detail".
std::string format_report(const SuiteReport& report);

}  // namespace qmu
