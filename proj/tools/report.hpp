#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cb/verify.hpp"

namespace cbtool {

/// What every command produces: a text body, a structured body and checks.
struct Report {
  std::string command;
  std::vector<std::string> text;
  nlohmann::json result = nlohmann::json::object();
  std::vector<cb::CheckResult> checks;

  void check(std::string name, bool pass, std::string witness = {});
  bool all_pass() const;
};

/// Writes the report to stdout; returns the process exit code.
int emit(const Report& r, bool json);

}  // namespace cbtool
