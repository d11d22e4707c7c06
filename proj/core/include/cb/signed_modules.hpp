#pragma once

#include <string>
#include <string_view>

#include "cb/lincomb.hpp"
#include "cb/pi_bialgebra.hpp"
#include "cb/signed_permutation.hpp"
#include "cb/word_bialgebra.hpp"

namespace cb {

/// [π]_B = Σ_{w∈𝓡^B(π)} [w,n] for π ∈ B_n.
struct BPiKey {
  SignedPermutation perm;

  int frame() const { return perm.size(); }
  int degree() const { return length_b(perm); }
  auto operator<=>(const BPiKey&) const = default;
  bool operator==(const BPiKey&) const = default;
};

/// [π]_D = Σ_{w∈𝓡^D(π)} [w,n]; only constructed for π ∈ D_n.
struct DPiKey {
  SignedPermutation perm;

  int frame() const { return perm.size(); }
  int degree() const { return length_d(perm); }
  auto operator<=>(const DPiKey&) const = default;
  bool operator==(const DPiKey&) const = default;
};

using BPiElem = LinComb<BPiKey>;
using DPiElem = LinComb<DPiKey>;

/// "[1,-3,-2]_B", "[1,-2,-3]_D".
std::string to_string(const BPiKey& k);
std::string to_string(const DPiKey& k);
BPiKey parse_bpikey(std::string_view text);
DPiKey parse_dpikey(std::string_view text);
std::string render(const BPiElem& x);
std::string render(const DPiElem& x);
std::string render(const Tensor<BPiKey, BPiKey>& x);
std::string render(const Tensor<DPiKey, DPiKey>& x);

/// [π]_B as a single-term element.
BPiElem b_element(const SignedPermutation& p);
/// [π]_D, which is zero when π ∉ D_n.
DPiElem d_element(const SignedPermutation& p);

WElem expand(const BPiKey& k);
WElem expand(const DPiKey& k);
WElem expand(const BPiElem& x);
WElem expand(const DPiElem& x);

/// Regroup words into classes 𝓡^B(σ) (resp. 𝓡^D(σ)); throws
/// InternalInconsistency unless the classes are covered exactly.
BPiElem regroup_b(const WElem& x);
DPiElem regroup_d(const WElem& x);

/// [u]_B·[v]: shuffle 𝓡^B(u) with 𝓡(v)↑m and regroup. There is no known
/// closed rule; this is the brute-force action.
BPiElem bmodule_action(const BPiKey& u, const PiKey& v);
BPiElem bmodule_action(const BPiElem& x, const PiElem& y);
/// [u]_D·[v]; u must have at least two entries.
DPiElem dmodule_action(const DPiKey& u, const PiKey& v);
DPiElem dmodule_action(const DPiElem& x, const PiElem& y);

/// Sums over type-B (resp. D) length-additive factorisations.
Tensor<BPiKey, BPiKey> b_coproduct(const BPiKey& u);
Tensor<DPiKey, DPiKey> d_coproduct(const DPiKey& u);

}  // namespace cb
