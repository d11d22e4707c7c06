#pragma once

#include <vector>

#include "cb/permutation.hpp"
#include "cb/rational.hpp"

namespace cb {

/// 𝒜(n): π₁ = πₙ + 1 and fl(π₂⋯πₙ₋₁) ∈ 𝒜(n−2), seeded by 𝒜(1) = {1},
/// 𝒜(2) = {21}. Sorted. Throws InvalidInput for n < 1.
std::vector<Permutation> gen_A_set(int n);

/// ℬ(m,n) for 1 ≤ m ≤ n. ℬ(1,n) = ℬ(n,n) = {n⋯21}; otherwise π₁ = m with
/// fl(π₂⋯πₙ) ∈ ℬ(m−1,n−1), or πₙ = m with fl(π₁⋯πₙ₋₁) ∈ ℬ(m,n−1). Sorted.
std::vector<Permutation> gen_B_set(int m, int n);

/// N(p,q) = C(P+Q, P) r(p⋯21) r(q⋯21) with P = C(p,2), Q = C(q,2).
BigInt shuffle_count_N(int p, int q);

/// (n−1)!! = (n−1)(n−3)⋯, with 0!! = (−1)!! = 1.
BigInt double_factorial_below(int n);

}  // namespace cb
