#include <gtest/gtest.h>

#include "cb/error.hpp"
#include "cb/verify.hpp"

using namespace cb;

TEST(Verify, EverySuitePassesAtSmallSizes) {
  for (const auto& s : suites()) {
    const auto report = run_suite(s.name, s.default_max_n == 0 ? std::nullopt : std::optional<int>(std::min(s.default_max_n, 4)));
    EXPECT_FALSE(report.checks.empty()) << s.name;
    for (const auto& c : report.checks) EXPECT_TRUE(c.pass) << s.name << ": " << c.name << " " << c.witness;
  }
}

TEST(Verify, UnknownSuite) { EXPECT_THROW(run_suite("nope", std::nullopt), InvalidInput); }
