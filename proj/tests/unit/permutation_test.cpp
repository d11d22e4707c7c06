#include <gtest/gtest.h>

#include <set>

#include "cb/permutation.hpp"
#include "oracles.hpp"

using namespace cb;

namespace {
std::set<std::vector<int>> as_set(const std::vector<Word>& ws) {
  std::set<std::vector<int>> out;
  for (const auto& w : ws) out.insert(w.letters());
  return out;
}
}  // namespace

TEST(Permutation, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_permutation("231645")), "231645");
  EXPECT_EQ(to_string(parse_permutation("1,10,2,3,4,5,6,7,8,9")), "1,10,2,3,4,5,6,7,8,9");
  EXPECT_THROW(parse_permutation("112"), std::invalid_argument);
  EXPECT_THROW(parse_permutation("13"), std::invalid_argument);
}

TEST(Permutation, LengthIsInversionCount) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : all_permutations(n)) ASSERT_EQ(p.length(), oracle::inversions(p.oneline()));
  EXPECT_EQ(parse_permutation("321").length(), 3);
}

TEST(Permutation, ReducedWordsAgainstBruteForce) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : all_permutations(n)) {
      const auto lib = reduced_words(p);
      ASSERT_EQ(as_set(lib), oracle::reduced_words_brute(p.oneline())) << to_string(p);
      ASSERT_EQ(BigInt(lib.size()), reduced_word_count(p));
    }
}

TEST(Permutation, ReducedWordCountsAgainstLeftDescents) {
  for (const auto& p : all_permutations(7))
    ASSERT_EQ(reduced_word_count(p), oracle::count_reduced_words(p.oneline())) << to_string(p);
  EXPECT_EQ(reduced_word_count(Permutation::longest(4)), 16);
  EXPECT_EQ(reduced_word_count(Permutation::longest(5)), 768);
}

TEST(Permutation, ListedReducedWords) {
  EXPECT_EQ(as_set(reduced_words(parse_permutation("231"))), (std::set<std::vector<int>>{{1, 2}}));
  EXPECT_EQ(as_set(reduced_words(parse_permutation("312"))), (std::set<std::vector<int>>{{2, 1}}));
  EXPECT_EQ(as_set(reduced_words(Permutation::identity(3))), (std::set<std::vector<int>>{{}}));
}

TEST(Permutation, WordEvaluation) {
  EXPECT_EQ(permutation_from_word(Word{1, 2}, 3), parse_permutation("231"));
  for (const auto& p : all_permutations(4))
    for (const auto& w : reduced_words(p)) EXPECT_EQ(oracle::apply_word(w.letters(), 4), p.oneline());
}

TEST(Permutation, Slashes) {
  EXPECT_EQ(slash_over(Word{1, 3, 5, 7}, Word{6, 5, 4, 3}), parse_permutation("13578642"));
  EXPECT_EQ(slash_under(Word{1, 3, 5, 7}, Word{6, 5, 4, 3}), parse_permutation("12786543"));
  EXPECT_EQ(slash_over(Word{2, 1, 3}, Word{}), parse_permutation("213"));
  EXPECT_EQ(slash_under(Word{}, Word{2, 1, 3}), parse_permutation("213"));
  EXPECT_THROW(slash_over(Word{1, 1}, Word{2}), std::invalid_argument);
}

TEST(Permutation, DirectSumAndFactors) {
  EXPECT_EQ(direct_sum(parse_permutation("231"), parse_permutation("312")), parse_permutation("231645"));
  const auto f = irreducible_factors(parse_permutation("21435"));
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], parse_permutation("21"));
  EXPECT_EQ(f[1], parse_permutation("21"));
  EXPECT_EQ(f[2], parse_permutation("1"));
  EXPECT_EQ(irreducible_factors(Permutation::identity(3)).size(), 3u);
  for (const auto& p : all_permutations(5)) {
    Permutation back = Permutation::identity(0 + 1);
    bool first = true;
    for (const auto& q : irreducible_factors(p)) {
      EXPECT_TRUE(is_irreducible(q));
      back = first ? q : direct_sum(back, q);
      first = false;
    }
    EXPECT_EQ(back, p);
  }
}

TEST(Permutation, ThreeTwoOneAvoidingByTripleScan) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : all_permutations(n)) {
      const auto& x = p.oneline();
      bool pattern = false;
      for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
          for (std::size_t k = j + 1; k < x.size(); ++k) pattern |= x[i] > x[j] && x[j] > x[k];
      ASSERT_EQ(is_321_avoiding(p), !pattern) << to_string(p);
    }
  EXPECT_TRUE(is_321_avoiding(parse_permutation("4123")));
}

TEST(Permutation, DecreasingWordCharacterisationsAgree) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : all_permutations(n)) {
      bool brute = false;
      for (const auto& w : oracle::reduced_words_brute(p.oneline()))
        brute |= std::is_sorted(w.rbegin(), w.rend(), std::less_equal<int>());
      ASSERT_EQ(has_decreasing_reduced_word(p), brute) << to_string(p);
      ASSERT_EQ(satisfies_decreasing_criterion(p), brute) << to_string(p);
      ASSERT_EQ(has_decreasing_cycle_form(p), brute) << to_string(p);
    }
  EXPECT_FALSE(has_decreasing_reduced_word(parse_permutation("321")));
  EXPECT_TRUE(has_decreasing_reduced_word(parse_permutation("312")));
}

TEST(Permutation, GroupOperations) {
  for (const auto& p : all_permutations(4)) {
    EXPECT_TRUE((p * p.inverse()).is_identity());
    EXPECT_EQ(p.inverse().length(), p.length());
  }
  EXPECT_EQ(Permutation::longest(3), parse_permutation("321"));
}
