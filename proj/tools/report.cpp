#include "report.hpp"

#include <algorithm>
#include <iostream>

namespace cbtool {

void Report::check(std::string name, bool pass, std::string witness) {
  checks.push_back({std::move(name), pass, pass ? std::string{} : std::move(witness)});
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const cb::CheckResult& c) { return c.pass; });
}

int emit(const Report& r, bool json) {
  if (json) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
      nlohmann::json row{{"name", c.name}, {"pass", c.pass}};
      if (!c.pass) row["witness"] = c.witness;
      checks.push_back(std::move(row));
    }
    nlohmann::json out{{"schema", 1}, {"command", r.command}, {"result", r.result}, {"checks", std::move(checks)},
                       {"pass", r.all_pass()}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& line : r.text) std::cout << line << "\n";
    for (const auto& c : r.checks) {
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.pass && !c.witness.empty()) std::cout << " (witness: " << c.witness << ")";
      std::cout << "\n";
    }
  }
  return r.all_pass() ? 0 : 1;
}

}  // namespace cbtool
