#include <gtest/gtest.h>

#include "cb/error.hpp"
#include "cb/families.hpp"

using namespace cb;

namespace {
std::vector<std::string> names(const std::vector<Permutation>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}
}  // namespace

TEST(Families, ListedMembers) {
  EXPECT_EQ(names(gen_A_set(3)), (std::vector<std::string>{"231", "312"}));
  EXPECT_EQ(names(gen_A_set(4)), (std::vector<std::string>{"2431", "3412", "4213"}));
  EXPECT_EQ(names(gen_A_set(5)),
            (std::vector<std::string>{"24531", "25341", "34512", "35142", "42513", "45123", "52314", "53124"}));
  EXPECT_EQ(names(gen_B_set(2, 4)), (std::vector<std::string>{"2431", "3412", "4132"}));
  EXPECT_EQ(names(gen_B_set(3, 4)), (std::vector<std::string>{"3241", "3412", "4213"}));
  EXPECT_EQ(names(gen_B_set(2, 5)), (std::vector<std::string>{"25431", "35412", "45132", "51432"}));
  EXPECT_EQ(names(gen_B_set(3, 5)),
            (std::vector<std::string>{"32541", "34512", "35142", "42513", "45123", "52143"}));
  EXPECT_EQ(names(gen_B_set(4, 5)), (std::vector<std::string>{"43251", "43512", "45213", "53214"}));
  EXPECT_EQ(names(gen_B_set(1, 4)), (std::vector<std::string>{"4321"}));
  EXPECT_EQ(names(gen_B_set(4, 4)), (std::vector<std::string>{"4321"}));
}

TEST(Families, Counts) {
  EXPECT_EQ(double_factorial_below(6), 15);
  EXPECT_EQ(double_factorial_below(1), 1);
  EXPECT_EQ(shuffle_count_N(2, 2), 2);
  EXPECT_EQ(shuffle_count_N(3, 3), binomial(6, 3) * 4);
}

TEST(Families, InvalidArguments) {
  EXPECT_THROW(gen_A_set(0), InvalidInput);
  EXPECT_THROW(gen_B_set(3, 2), InvalidInput);
  EXPECT_THROW(gen_B_set(0, 2), InvalidInput);
}
