#include "cb/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "cb/coxeter.hpp"
#include "cb/error.hpp"

namespace cb {

Permutation::Permutation(std::vector<int> oneline) : oneline_(std::move(oneline)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int x : oneline_) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x)])
      throw InvalidInput("not a permutation of 1.." + std::to_string(n));
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v), Unchecked{});
}

Permutation Permutation::longest(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(v), Unchecked{});
}

Permutation Permutation::inverse() const {
  std::vector<int> v(oneline_.size());
  for (int i = 1; i <= size(); ++i) v[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(v), Unchecked{});
}

Permutation Permutation::times_generator(int i) const {
  if (i < 1 || i >= size()) throw InvalidInput("generator s_" + std::to_string(i) + " not in S_" + std::to_string(size()));
  std::vector<int> v(oneline_);
  std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
  return Permutation(std::move(v), Unchecked{});
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < oneline_.size(); ++i)
    for (std::size_t j = i + 1; j < oneline_.size(); ++j)
      if (oneline_[i] > oneline_[j]) ++inv;
  return inv;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw InvalidInput("composing permutations of different sizes");
  std::vector<int> v(a.oneline_.size());
  for (int i = 1; i <= a.size(); ++i) v[static_cast<std::size_t>(i - 1)] = a(b(i));
  return Permutation(std::move(v), Permutation::Unchecked{});
}

std::string to_string(const Permutation& p) {
  std::string out;
  const bool small = p.size() <= 9;
  for (int i = 1; i <= p.size(); ++i) {
    if (!small && i > 1) out += ',';
    out += std::to_string(p(i));
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  return as_permutation(parse_word(text));
}

Permutation as_permutation(const Word& w) { return Permutation(w.letters()); }

Word as_word(const Permutation& p) { return Word(p.oneline()); }

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Permutation permutation_from_word(const Word& w, int n) {
  return coxeter::evaluate<coxeter::TypeA>(w, n);
}

std::vector<Word> reduced_words(const Permutation& p) { return coxeter::reduced_words<coxeter::TypeA>(p); }

BigInt reduced_word_count(const Permutation& p) { return coxeter::reduced_word_count<coxeter::TypeA>(p); }

Permutation flatten_to_permutation(const Word& w) {
  if (!w.has_distinct_letters()) throw InvalidInput("flatten_to_permutation needs distinct letters");
  return as_permutation(flatten(w));
}

namespace {

// Letter sets of a and b, both inside [1, |a|+|b|], no repeats.
void check_slash_operands(const Word& a, const Word& b) {
  const auto n = static_cast<Letter>(a.size() + b.size());
  if (!a.has_distinct_letters() || !b.has_distinct_letters())
    throw InvalidInput("slash operands must not repeat letters");
  for (Letter x : a)
    if (x > n) throw InvalidInput("slash operand letter exceeds |a|+|b|");
  for (Letter x : b)
    if (x > n) throw InvalidInput("slash operand letter exceeds |a|+|b|");
}

// Order-preserving relabelling of `w` onto [1, n] minus `avoid`.
std::vector<int> relabel_avoiding(const Word& w, const Word& avoid, int n) {
  std::set<int> excluded(avoid.begin(), avoid.end());
  std::vector<int> targets;
  for (int x = 1; x <= n; ++x)
    if (!excluded.count(x)) targets.push_back(x);
  Word flat = flatten(w);
  std::vector<int> out;
  out.reserve(w.size());
  for (Letter r : flat) out.push_back(targets[static_cast<std::size_t>(r - 1)]);
  return out;
}

}  // namespace

Permutation slash_over(const Word& a, const Word& b) {
  check_slash_operands(a, b);
  const int n = static_cast<int>(a.size() + b.size());
  std::vector<int> v(a.begin(), a.end());
  auto tail = relabel_avoiding(b, a, n);
  v.insert(v.end(), tail.begin(), tail.end());
  return Permutation(std::move(v));
}

Permutation slash_under(const Word& a, const Word& b) {
  check_slash_operands(a, b);
  const int n = static_cast<int>(a.size() + b.size());
  std::vector<int> v = relabel_avoiding(a, b, n);
  v.insert(v.end(), b.begin(), b.end());
  return Permutation(std::move(v));
}

Permutation direct_sum(const Permutation& u, const Permutation& v) {
  std::vector<int> out(u.oneline());
  for (int x : v.oneline()) out.push_back(x + u.size());
  return Permutation(std::move(out));
}

std::vector<Permutation> irreducible_factors(const Permutation& p) {
  std::vector<Permutation> out;
  int start = 0;
  int running_max = 0;
  for (int i = 1; i <= p.size(); ++i) {
    running_max = std::max(running_max, p(i));
    if (running_max == i) {
      std::vector<int> block;
      for (int j = start + 1; j <= i; ++j) block.push_back(p(j) - start);
      out.emplace_back(std::move(block));
      start = i;
    }
  }
  return out;
}

bool is_irreducible(const Permutation& p) { return irreducible_factors(p).size() == 1; }

bool is_321_avoiding(const Permutation& p) {
  // Track, left to right, the largest value seen and the largest value that
  // already has a larger value to its left; a 321 needs a third, smaller one.
  int max_seen = 0;
  int max_middle = 0;
  for (int x : p.oneline()) {
    if (x < max_middle) return false;
    if (x < max_seen) max_middle = std::max(max_middle, x);
    max_seen = std::max(max_seen, x);
  }
  return true;
}

bool has_decreasing_reduced_word(const Permutation& p) {
  // A strictly decreasing word read right to left is strictly increasing, so
  // peel right descents in increasing order.
  auto rec = [](auto&& self, const Permutation& x, int floor) -> bool {
    if (x.is_identity()) return true;
    for (int i = floor + 1; i < x.size(); ++i)
      if (x.has_right_descent(i) && self(self, x.times_generator(i), i)) return true;
    return false;
  };
  return rec(rec, p, 0);
}

bool satisfies_decreasing_criterion(const Permutation& p) {
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) < i && p(i) != i - 1) return false;
  return true;
}

bool has_decreasing_cycle_form(const Permutation& p) {
  std::vector<bool> seen(static_cast<std::size_t>(p.size()) + 1, false);
  for (int start = 1; start <= p.size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = p(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      cycle.push_back(x);
    }
    if (cycle.size() == 1) continue;
    // Rotate so the largest entry leads; then entries must step down by one.
    auto top = std::max_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), top, cycle.end());
    for (std::size_t k = 1; k < cycle.size(); ++k)
      if (cycle[k] != cycle[k - 1] - 1) return false;
  }
  return true;
}

}  // namespace cb
