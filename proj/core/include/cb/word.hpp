#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cb/lincomb.hpp"

namespace cb {

using Letter = int;

/// A finite sequence of positive integers.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  /// max(w), with max(∅) = 0.
  Letter max_letter() const;

  /// w↑n: every letter incremented by n.
  Word shifted(int n) const;
  Word reversed() const;
  /// w₁⋯w_{k}.
  Word prefix(std::size_t k) const;
  /// w_{k+1}⋯w_m.
  Word suffix_from(std::size_t k) const;
  /// Letters at the given 0-based positions, in order.
  Word at_positions(std::span<const std::size_t> positions) const;
  /// Letters lying in [lo, hi], in order.
  Word restricted_to(Letter lo, Letter hi) const;

  bool has_distinct_letters() const;

  friend Word operator+(const Word& a, const Word& b);
  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Digits when every letter is at most 9, comma-separated otherwise. ∅ is "".
std::string to_string(const Word& w);
/// Accepts "1254", "1,2,5,4" and "" (or "∅") for the empty word.
Word parse_word(std::string_view text);

/// Order-preserving relabelling onto {1,…,#distinct letters}.
Word flatten(const Word& w);

/// All interleavings of u and v, listed with multiplicity (C(|u|+|v|, |u|)
/// entries), sorted.
std::vector<Word> shuffle(const Word& u, const Word& v);
/// u ⧢ v as a linear combination with multiplicities as coefficients.
LinComb<Word> shuffle_product(const Word& u, const Word& v);
/// Shuffle-algebra antipode (−1)^ℓ(w) wʳ.
LinComb<Word> shuffle_antipode(const Word& w);

/// 1-based positions, ascending.
using PositionSet = std::vector<int>;

PositionSet descents(const Word& w);
PositionSet peaks(const Word& w);
PositionSet valleys(const Word& w);

bool is_weakly_increasing(const Word& w);
bool is_weakly_decreasing(const Word& w);
bool is_strictly_increasing(const Word& w);
bool is_strictly_decreasing(const Word& w);

/// Number of letters equal to 1.
int count_ones(const Word& w);
/// Number of letters equal to 1 or 2.
int count_ones_and_twos(const Word& w);

}  // namespace cb

template <>
struct std::hash<cb::Word> {
  std::size_t operator()(const cb::Word& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : w) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
    return h;
  }
};
