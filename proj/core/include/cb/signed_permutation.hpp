#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "cb/permutation.hpp"
#include "cb/rational.hpp"
#include "cb/word.hpp"

namespace cb {

/// An element of B_n, stored as the window (π(1), …, π(n)); π(−i) = −π(i).
class SignedPermutation {
 public:
  SignedPermutation() : oneline_{1} {}
  explicit SignedPermutation(std::vector<int> oneline);
  SignedPermutation(std::initializer_list<int> oneline)
      : SignedPermutation(std::vector<int>(oneline)) {}

  static SignedPermutation identity(int n);
  static SignedPermutation from_unsigned(const Permutation& p);

  int size() const { return static_cast<int>(oneline_.size()); }
  /// π(i) for 1 ≤ |i| ≤ n.
  int operator()(int i) const {
    return i > 0 ? oneline_[static_cast<std::size_t>(i - 1)] : -oneline_[static_cast<std::size_t>(-i - 1)];
  }
  const std::vector<int>& oneline() const { return oneline_; }

  SignedPermutation inverse() const;
  friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b);

  /// π s^B_i: i = 1 negates π(1); i ≥ 2 swaps positions i−1 and i.
  SignedPermutation times_generator_b(int i) const;
  /// π s^D_i: i = 1 sends (π(1), π(2)) to (−π(2), −π(1)); i ≥ 2 as in type B.
  SignedPermutation times_generator_d(int i) const;

  /// ℓ₀(π) = #{i : π(i) < 0}.
  int negative_count() const;
  bool in_d() const { return negative_count() % 2 == 0; }
  bool is_identity() const;

  auto operator<=>(const SignedPermutation&) const = default;
  bool operator==(const SignedPermutation&) const = default;

 private:
  std::vector<int> oneline_;
};

/// Machine form: digits when every entry is positive and n ≤ 9, otherwise
/// comma-separated with a leading '-' on negative entries ("1,-3,-2").
std::string to_string(const SignedPermutation& p);
/// Human form with barred negatives ("13̄2̄").
std::string to_human_string(const SignedPermutation& p);
SignedPermutation parse_signed_permutation(std::string_view text);

std::vector<SignedPermutation> all_signed_permutations(int n);
std::vector<SignedPermutation> all_even_signed_permutations(int n);

/// inv(π) + Σ_{π(i)<0} |π(i)|.
int length_b(const SignedPermutation& p);
/// inv(π) + Σ_{π(i)<0} (|π(i)| − 1). Throws NotInGroup outside D_n.
int length_d(const SignedPermutation& p);

SignedPermutation signed_permutation_from_word_b(const Word& w, int n);
/// Throws InvalidInput for n < 2 or letters outside [1, n].
SignedPermutation signed_permutation_from_word_d(const Word& w, int n);

std::vector<Word> reduced_words_b(const SignedPermutation& p);
/// Empty when π ∉ D_n.
std::vector<Word> reduced_words_d(const SignedPermutation& p);
BigInt reduced_word_count_b(const SignedPermutation& p);
BigInt reduced_word_count_d(const SignedPermutation& p);

}  // namespace cb

template <>
struct std::hash<cb::SignedPermutation> {
  std::size_t operator()(const cb::SignedPermutation& p) const noexcept {
    std::size_t h = 0x2325cbf29ce48422ull;
    for (auto x : p.oneline()) h = (h ^ static_cast<std::size_t>(x + 1024)) * 0x100000001b3ull;
    return h;
  }
};
