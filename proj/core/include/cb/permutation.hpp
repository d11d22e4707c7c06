#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "cb/rational.hpp"
#include "cb/word.hpp"

namespace cb {

/// An element of S_n in one-line notation π₁π₂⋯πₙ. n = 0 is allowed and
/// denotes the empty permutation.
class Permutation {
 public:
  /// The identity of S_1.
  Permutation() : oneline_{1} {}
  explicit Permutation(std::vector<int> oneline);
  Permutation(std::initializer_list<int> oneline) : Permutation(std::vector<int>(oneline)) {}

  static Permutation identity(int n);
  /// w₀ = n⋯321.
  static Permutation longest(int n);

  int size() const { return static_cast<int>(oneline_.size()); }
  /// π(i) for 1 ≤ i ≤ n.
  int operator()(int i) const { return oneline_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& oneline() const { return oneline_; }

  Permutation inverse() const;
  /// Right multiplication by s_i: swaps positions i and i+1.
  Permutation times_generator(int i) const;
  bool has_right_descent(int i) const { return (*this)(i) > (*this)(i + 1); }
  /// Number of inversions.
  int length() const;
  bool is_identity() const;

  /// Function composition: (a*b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> oneline, Unchecked) : oneline_(std::move(oneline)) {}
  std::vector<int> oneline_;
};

/// Digits for n ≤ 9, comma-separated beyond.
std::string to_string(const Permutation& p);
Permutation parse_permutation(std::string_view text);

/// The letters of w as a permutation (w must list 1..n).
Permutation as_permutation(const Word& w);
Word as_word(const Permutation& p);

/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// s_{w₁}⋯s_{w_l} ∈ S_n. Throws InvalidInput if some letter is ≥ n.
Permutation permutation_from_word(const Word& w, int n);

/// 𝓡(π), sorted.
std::vector<Word> reduced_words(const Permutation& p);
/// r(π) = |𝓡(π)|.
BigInt reduced_word_count(const Permutation& p);

/// fl(w) for a word with distinct letters, as a permutation.
Permutation flatten_to_permutation(const Word& w);

/// a ⫽ b = a ψ(b), with ψ the order-preserving bijection B → [n] − A.
Permutation slash_over(const Word& a, const Word& b);
/// a ⑊ b = φ(a) b, with φ the order-preserving bijection A → [n] − B.
Permutation slash_under(const Word& a, const Word& b);

/// u ⊕ v = u (v↑|u|).
Permutation direct_sum(const Permutation& u, const Permutation& v);
/// The unique factorisation into ⊕-irreducible blocks.
std::vector<Permutation> irreducible_factors(const Permutation& p);
bool is_irreducible(const Permutation& p);

/// No i<j<k with πᵢ > πⱼ > πₖ.
bool is_321_avoiding(const Permutation& p);

/// Some reduced word is strictly decreasing (search over 𝓡(π)).
bool has_decreasing_reduced_word(const Permutation& p);
/// πᵢ = i−1 whenever πᵢ < i.
bool satisfies_decreasing_criterion(const Permutation& p);
/// Every cycle has the form (b, b−1, …, a+1, a).
bool has_decreasing_cycle_form(const Permutation& p);

}  // namespace cb

template <>
struct std::hash<cb::Permutation> {
  std::size_t operator()(const cb::Permutation& p) const noexcept {
    std::size_t h = 0x84222325cbf29ce4ull;
    for (auto x : p.oneline()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
    return h;
  }
};
