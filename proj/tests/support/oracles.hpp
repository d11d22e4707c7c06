#pragma once

// Test-side reference implementations. They deliberately avoid the library's
// algorithms and work straight from definitions.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <tuple>
#include <vector>

#include "cb/permutation.hpp"
#include "cb/rational.hpp"
#include "cb/signed_permutation.hpp"

namespace oracle {

using Perm = std::vector<int>;
using Letters = std::vector<int>;

inline std::vector<Perm> permutations_of(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Perm flatten(const Perm& w) {
  Perm sorted = w;
  std::sort(sorted.begin(), sorted.end());
  Perm out;
  for (int x : w) out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()) + 1);
  return out;
}

inline int inversions(const Perm& p) {
  int n = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) n += p[i] > p[j];
  return n;
}

inline Perm apply_word(const Letters& w, int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  for (int i : w) std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(i)]);
  return p;
}

/// r(π) by recursion on left descents: π = s_i σ with ℓ(σ) = ℓ(π) − 1.
inline cb::BigInt count_reduced_words(const Perm& p) {
  static std::map<Perm, cb::BigInt> memo;
  if (auto it = memo.find(p); it != memo.end()) return it->second;
  cb::BigInt total = 0;
  bool any = false;
  Perm inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p[i] - 1)] = static_cast<int>(i);
  for (std::size_t v = 1; v < p.size(); ++v) {
    // left descent at v: value v+1 appears before value v
    if (inv[v] < inv[v - 1]) {
      any = true;
      Perm q = p;
      std::swap(q[static_cast<std::size_t>(inv[v])], q[static_cast<std::size_t>(inv[v - 1])]);
      total += count_reduced_words(q);
    }
  }
  if (!any) total = 1;
  memo.emplace(p, total);
  return total;
}

/// All words of length ℓ(π) over {1..n−1} that evaluate to π.
inline std::set<Letters> reduced_words_brute(const Perm& p) {
  const int n = static_cast<int>(p.size());
  const int len = inversions(p);
  std::set<Letters> out;
  Letters w;
  std::function<void(Perm)> grow = [&](Perm cur) {
    if (static_cast<int>(w.size()) == len) {
      if (cur == p) out.insert(w);
      return;
    }
    for (int i = 1; i < n; ++i) {
      if (cur[static_cast<std::size_t>(i - 1)] > cur[static_cast<std::size_t>(i)]) continue;
      Perm next = cur;
      std::swap(next[static_cast<std::size_t>(i - 1)], next[static_cast<std::size_t>(i)]);
      w.push_back(i);
      grow(next);
      w.pop_back();
    }
  };
  Perm id(p.size());
  std::iota(id.begin(), id.end(), 1);
  grow(id);
  return out;
}

/// Every interleaving of a and b (with multiplicity), by position subsets.
inline std::vector<Letters> interleavings(const Letters& a, const Letters& b) {
  const std::size_t n = a.size() + b.size();
  std::vector<Letters> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(a.size()), true);
  std::sort(pick.begin(), pick.end());
  do {
    Letters w;
    std::size_t i = 0, j = 0;
    for (bool from_a : pick) w.push_back(from_a ? a[i++] : b[j++]);
    out.push_back(w);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

/// Counts reduced words of pi whose letters ≤ m spell a reduced word of u
/// and whose letters > m spell (a reduced word of v) shifted by m.
/// Peels right descents of pi from the end of the word.
class SplitWordCounter {
 public:
  SplitWordCounter(Perm u, Perm v) : u_(std::move(u)), v_(std::move(v)), m_(static_cast<int>(u_.size()) - 1) {}

  cb::BigInt count(const Perm& pi) { return go(pi, u_, v_); }

 private:
  static bool descent(const Perm& p, int i) { return p[static_cast<std::size_t>(i - 1)] > p[static_cast<std::size_t>(i)]; }
  static Perm swapped(Perm p, int i) {
    std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(i)]);
    return p;
  }
  static bool identity(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  cb::BigInt go(const Perm& x, const Perm& p, const Perm& q) {
    if (identity(x)) return identity(p) && identity(q) ? 1 : 0;
    auto key = std::make_tuple(x, p, q);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    cb::BigInt total = 0;
    for (int i = 1; i < static_cast<int>(x.size()); ++i) {
      if (!descent(x, i)) continue;
      if (i <= m_) {
        if (descent(p, i)) total += go(swapped(x, i), swapped(p, i), q);
      } else if (descent(q, i - m_)) {
        total += go(swapped(x, i), p, swapped(q, i - m_));
      }
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  Perm u_, v_;
  int m_;
  std::map<std::tuple<Perm, Perm, Perm>, cb::BigInt> memo_;
};

/// 𝒜(n) by brute-force filtering of S_n.
inline bool in_A(const Perm& p) {
  const std::size_t n = p.size();
  if (n == 1) return p == Perm{1};
  if (n == 2) return p == Perm{2, 1};
  if (p.front() != p.back() + 1) return false;
  return in_A(flatten(Perm(p.begin() + 1, p.end() - 1)));
}

/// ℬ(m,n) by brute-force filtering of S_n.
inline bool in_B(int m, const Perm& p) {
  const int n = static_cast<int>(p.size());
  if (m == 1 || m == n) {
    for (int i = 0; i < n; ++i)
      if (p[static_cast<std::size_t>(i)] != n - i) return false;
    return true;
  }
  return (p.front() == m && in_B(m - 1, flatten(Perm(p.begin() + 1, p.end())))) ||
         (p.back() == m && in_B(m, flatten(Perm(p.begin(), p.end() - 1))));
}

/// Right action of a type-B or type-D generator on one-line notation:
/// s1 negates position 1 (B) or maps (a,b) to (-b,-a) (D); s_i, i >= 2,
/// swaps positions i-1 and i.
inline Perm act_signed(char type, const Perm& x, int i) {
  Perm y = x;
  if (i == 1 && type == 'B') {
    y[0] = -y[0];
  } else if (i == 1) {
    y[0] = -x[1];
    y[1] = -x[0];
  } else {
    std::swap(y[static_cast<std::size_t>(i - 2)], y[static_cast<std::size_t>(i - 1)]);
  }
  return y;
}

/// Breadth-first search of the Cayley graph from the identity: distance and
/// number of shortest paths (= number of reduced words) for every element.
struct CayleyData {
  std::map<Perm, int> dist;
  std::map<Perm, cb::BigInt> paths;
};

inline CayleyData cayley(char type, int n) {
  Perm id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 1);
  CayleyData out;
  out.dist[id] = 0;
  out.paths[id] = 1;
  std::vector<Perm> frontier{id};
  const int first = type == 'D' && n < 2 ? 2 : 1;
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (int i = first; i <= n; ++i) {
        Perm y = act_signed(type, x, i);
        auto [it, fresh] = out.dist.emplace(y, out.dist[x] + 1);
        if (fresh) next.push_back(y);
        if (it->second == out.dist[x] + 1) out.paths[y] += out.paths[x];
      }
    frontier = std::move(next);
  }
  return out;
}

inline Perm evaluate_signed(char type, const Letters& w, int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  for (int i : w) p = act_signed(type, p, i);
  return p;
}

/// Reduced words of a signed permutation, read off shortest paths.
inline std::vector<Letters> signed_reduced_words(char type, const Perm& target, const CayleyData& g) {
  std::vector<Letters> out;
  const int n = static_cast<int>(target.size());
  Letters rev;
  std::function<void(const Perm&)> back = [&](const Perm& x) {
    const int d = g.dist.at(x);
    if (d == 0) {
      out.emplace_back(rev.rbegin(), rev.rend());
      return;
    }
    for (int i = type == 'D' && n < 2 ? 2 : 1; i <= n; ++i) {
      Perm y = act_signed(type, x, i);
      if (g.dist.at(y) != d - 1) continue;
      rev.push_back(i);
      back(y);
      rev.pop_back();
    }
  };
  back(target);
  std::sort(out.begin(), out.end());
  return out;
}

inline cb::Permutation to_lib(const Perm& p) { return cb::Permutation(p); }
inline Perm from_lib(const cb::Permutation& p) { return p.oneline(); }

/// Schur polynomial s_λ(x1..xk) by semistandard tableau enumeration.
inline std::map<std::vector<int>, long> schur_polynomial(const std::vector<int>& lambda, int k) {
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < lambda.size(); ++r)
    for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  std::map<std::pair<int, int>, int> filling;
  std::map<std::vector<int>, long> out;
  std::function<void(std::size_t)> fill = [&](std::size_t idx) {
    if (idx == cells.size()) {
      std::vector<int> exps(static_cast<std::size_t>(k), 0);
      for (const auto& [cell, val] : filling) ++exps[static_cast<std::size_t>(val - 1)];
      ++out[exps];
      return;
    }
    const auto [r, c] = cells[idx];
    int lo = 1;
    if (c > 0) lo = std::max(lo, filling[{r, c - 1}]);
    if (r > 0) lo = std::max(lo, filling[{r - 1, c}] + 1);
    for (int val = lo; val <= k; ++val) {
      filling[{r, c}] = val;
      fill(idx + 1);
    }
    filling.erase({r, c});
  };
  fill(0);
  return out;
}

}  // namespace oracle
