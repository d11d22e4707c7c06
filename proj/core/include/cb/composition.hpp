#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace cb {

/// An integer composition α = (α₁,…,α_l) ⊨ n. Ordered by weight, then
/// lexicographically by parts.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  /// The composition of n with I(α) = set (entries in [1, n−1]).
  static Composition from_set(const std::vector<int>& set, int n);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// I(α) = {α₁, α₁+α₂, …, α₁+⋯+α_{l−1}}.
  std::vector<int> partial_sums() const;

  std::strong_ordering operator<=>(const Composition& o) const;
  bool operator==(const Composition& o) const { return parts_ == o.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// "[1,2]"; the empty composition is "[]".
std::string to_string(const Composition& a);
/// Accepts "[1,2]", "1,2", "[]".
Composition parse_composition(std::string_view text);

/// αʳ.
Composition comp_reverse(const Composition& a);
/// αᶜ: I(αᶜ) = [n−1] − I(α).
Composition comp_complement(const Composition& a);
/// αᵗ = (αʳ)ᶜ.
Composition comp_transpose(const Composition& a);
/// αᵢ ≥ 2 for every part but the last.
bool is_peak_composition(const Composition& a);
/// α♭ = (α_l+1, α_{l−1}, …, α₂, α₁−1) for a peak composition; (n)♭ = (n).
/// Throws InvalidInput on a non-peak composition.
Composition comp_flat(const Composition& a);
/// Λ(α): I(Λ(α)) = {i ≥ 2 : i ∈ I(α), i−1 ∉ I(α)}.
Composition comp_lambda(const Composition& a);

/// All compositions of n, in increasing order.
std::vector<Composition> compositions_of(int n);
/// All peak compositions of n.
std::vector<Composition> peak_compositions_of(int n);

/// A weakly decreasing composition, i.e. a partition.
bool is_partition(const Composition& a);
bool is_strict_partition(const Composition& a);
/// Parts sorted into decreasing order.
Composition sort_to_partition(const Composition& a);
/// All partitions of n, in increasing order; strict ones only when asked.
std::vector<Composition> partitions_of(int n, bool strict = false);
/// λᵀ.
Composition conjugate(const Composition& lambda);
/// δₙ = (n−1, n−2, …, 1).
Composition staircase(int n);

}  // namespace cb
