#pragma once

#include <optional>
#include <string>

#include "report.hpp"

namespace cbtool {

struct Options {
  bool json = false;
  bool force = false;
  bool oracle = false;
  bool count_only = false;
  std::optional<int> max_n;
  std::string basis = "M";
  int left = 0;
  int right = 0;
};

/// Refusal that exits with status 2 and a message suggesting --force.
struct Refusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Report cmd_reduced_words(const std::string& group, const std::string& perm, const Options& o);
Report cmd_product(const std::string& kind, const std::string& lhs, const std::string& rhs, const Options& o);
Report cmd_coproduct(const std::string& kind, const std::string& x, const Options& o);
Report cmd_stanley(const std::string& type, const std::string& perm, const Options& o);
Report cmd_verify(const std::string& suite, const Options& o);
Report cmd_export(const std::string& dataset, const Options& o);
Report cmd_families(const std::string& family, int a, std::optional<int> b, const Options& o);

}  // namespace cbtool
