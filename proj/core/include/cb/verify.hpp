#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cb {

struct CheckResult {
  std::string name;
  bool pass = false;
  /// Smallest failing input, empty on success.
  std::string witness;
};

struct SuiteReport {
  std::string suite;
  int max_n = 0;
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

struct SuiteInfo {
  std::string name;
  std::string summary;
  int default_max_n;
};

const std::vector<SuiteInfo>& suites();

/// Runs a named identity suite. Throws InvalidInput for an unknown name.
SuiteReport run_suite(std::string_view name, std::optional<int> max_n = std::nullopt);

}  // namespace cb
