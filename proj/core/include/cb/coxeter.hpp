#pragma once

// Type-generic reduced-word machinery for the groups S_n, B_n and D_n with
// the generator conventions used throughout the library (right action on
// one-line notation, 1-indexed letters).

#include <algorithm>
#include <queue>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cb/error.hpp"
#include "cb/permutation.hpp"
#include "cb/signed_permutation.hpp"
#include "cb/word.hpp"

namespace cb::coxeter {

struct TypeA {
  using Element = Permutation;
  static constexpr char name = 'A';
  static int rank(const Element& e) { return std::max(0, e.size() - 1); }
  static Element identity(int n) { return Permutation::identity(n); }
  static Element act(const Element& e, int i) { return e.times_generator(i); }
  static bool is_descent(const Element& e, int i) { return e.has_right_descent(i); }
  static int length(const Element& e) { return e.length(); }
};

struct TypeB {
  using Element = SignedPermutation;
  static constexpr char name = 'B';
  static int rank(const Element& e) { return e.size(); }
  static Element identity(int n) { return SignedPermutation::identity(n); }
  static Element act(const Element& e, int i) { return e.times_generator_b(i); }
  static bool is_descent(const Element& e, int i) {
    return i == 1 ? e(1) < 0 : e(i - 1) > e(i);
  }
  static int length(const Element& e) { return length_b(e); }
};

struct TypeD {
  using Element = SignedPermutation;
  static constexpr char name = 'D';
  static int rank(const Element& e) { return e.size() >= 2 ? e.size() : 0; }
  static Element identity(int n) { return SignedPermutation::identity(n); }
  static Element act(const Element& e, int i) { return e.times_generator_d(i); }
  static bool is_descent(const Element& e, int i) {
    return i == 1 ? e(1) + e(2) < 0 : e(i - 1) > e(i);
  }
  static int length(const Element& e) { return length_d(e); }
};

/// Right descents of e, ascending.
template <class T>
std::vector<int> right_descents(const typename T::Element& e) {
  std::vector<int> out;
  for (int i = 1; i <= T::rank(e); ++i)
    if (T::is_descent(e, i)) out.push_back(i);
  return out;
}

/// All reduced words, sorted. Peels a right descent at a time; every branch
/// ends at the identity so nothing is wasted on non-reduced words.
template <class T>
std::vector<Word> reduced_words(const typename T::Element& e) {
  std::vector<Word> out;
  std::vector<Letter> stack;
  auto dfs = [&](auto&& self, const typename T::Element& x) -> void {
    bool any = false;
    for (int i = 1; i <= T::rank(x); ++i) {
      if (!T::is_descent(x, i)) continue;
      any = true;
      stack.push_back(i);
      self(self, T::act(x, i));
      stack.pop_back();
    }
    if (any) return;
    if (!x.is_identity()) throw InternalInconsistency("descent recursion stalled before the identity");
    out.emplace_back(std::vector<Letter>(stack.rbegin(), stack.rend()));
  };
  dfs(dfs, e);
  std::sort(out.begin(), out.end());
  return out;
}

/// |𝓡(e)| by descent recursion, memoised per thread.
template <class T>
BigInt reduced_word_count(const typename T::Element& e) {
  thread_local std::unordered_map<typename T::Element, BigInt> memo;
  auto rec = [&](auto&& self, const typename T::Element& x) -> BigInt {
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    BigInt total = 0;
    bool any = false;
    for (int i = 1; i <= T::rank(x); ++i) {
      if (!T::is_descent(x, i)) continue;
      any = true;
      total += self(self, T::act(x, i));
    }
    if (!any) {
      if (!x.is_identity()) throw InternalInconsistency("descent recursion stalled before the identity");
      total = 1;
    }
    memo.emplace(x, total);
    return total;
  };
  return rec(rec, e);
}

/// s_{w₁}⋯s_{w_l} applied to the identity of rank-n group.
template <class T>
typename T::Element evaluate(const Word& w, int n) {
  auto e = T::identity(n);
  const int r = T::rank(e);
  for (Letter i : w) {
    if (i < 1 || i > r)
      throw InvalidInput(std::string("letter ") + std::to_string(i) + " is not a generator of type " + T::name +
                         " with n = " + std::to_string(n));
    e = T::act(e, i);
  }
  return e;
}

/// Elements x with ℓ(x) + ℓ(x⁻¹e) = ℓ(e): the prefixes of reduced words of e,
/// found by breadth-first search from the identity.
template <class T>
std::vector<typename T::Element> reduced_prefixes(const typename T::Element& e) {
  using E = typename T::Element;
  std::unordered_set<E> seen;
  std::vector<E> frontier{T::identity(e.size())};
  seen.insert(frontier.front());
  std::vector<E> out = frontier;
  const int target = T::length(e);
  while (!frontier.empty()) {
    std::vector<E> next;
    for (const E& x : frontier) {
      const int lx = T::length(x);
      for (int i = 1; i <= T::rank(x); ++i) {
        if (T::is_descent(x, i)) continue;
        E y = T::act(x, i);
        if (seen.count(y)) continue;
        if (lx + 1 + T::length(y.inverse() * e) != target) continue;
        seen.insert(y);
        next.push_back(y);
        out.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cb::coxeter
