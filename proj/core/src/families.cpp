#include "cb/families.hpp"

#include <algorithm>
#include <set>

#include "cb/error.hpp"

namespace cb {

namespace {

// Relabel the values of p onto [n] minus `gaps`, order-preservingly.
std::vector<int> lift_into(const Permutation& p, int n, const std::set<int>& gaps) {
  std::vector<int> targets;
  for (int x = 1; x <= n; ++x)
    if (!gaps.count(x)) targets.push_back(x);
  std::vector<int> out;
  for (int x : p.oneline()) out.push_back(targets[static_cast<std::size_t>(x - 1)]);
  return out;
}

}  // namespace

std::vector<Permutation> gen_A_set(int n) {
  if (n < 1) throw InvalidInput("gen_A_set needs n >= 1");
  if (n == 1) return {Permutation{1}};
  if (n == 2) return {Permutation{2, 1}};
  std::vector<Permutation> out;
  for (const auto& inner : gen_A_set(n - 2)) {
    for (int last = 1; last < n; ++last) {
      std::vector<int> v{last + 1};
      auto mid = lift_into(inner, n, {last, last + 1});
      v.insert(v.end(), mid.begin(), mid.end());
      v.push_back(last);
      out.emplace_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> gen_B_set(int m, int n) {
  if (n < 1 || m < 1 || m > n) throw InvalidInput("gen_B_set needs 1 <= m <= n");
  if (m == 1 || m == n) return {Permutation::longest(n)};
  std::set<Permutation> out;
  for (const auto& tail : gen_B_set(m - 1, n - 1)) {
    std::vector<int> v{m};
    auto rest = lift_into(tail, n, {m});
    v.insert(v.end(), rest.begin(), rest.end());
    out.emplace(std::move(v));
  }
  for (const auto& head : gen_B_set(m, n - 1)) {
    auto v = lift_into(head, n, {m});
    v.push_back(m);
    out.emplace(std::move(v));
  }
  return {out.begin(), out.end()};
}

BigInt shuffle_count_N(int p, int q) {
  if (p < 1 || q < 1) throw InvalidInput("N(p,q) needs p, q >= 1");
  const unsigned P = static_cast<unsigned>(p * (p - 1) / 2);
  const unsigned Q = static_cast<unsigned>(q * (q - 1) / 2);
  return binomial(P + Q, P) * reduced_word_count(Permutation::longest(p)) *
         reduced_word_count(Permutation::longest(q));
}

BigInt double_factorial_below(int n) {
  BigInt out = 1;
  for (int k = n - 1; k > 1; k -= 2) out *= k;
  return out;
}

}  // namespace cb
