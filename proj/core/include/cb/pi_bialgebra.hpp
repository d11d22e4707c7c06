#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cb/lincomb.hpp"
#include "cb/permutation.hpp"
#include "cb/word_bialgebra.hpp"

namespace cb {

/// The symbol [π] = Σ_{w∈𝓡(π)} [w,n] for π ∈ S_{n+1}.
struct PiKey {
  Permutation perm;

  int frame() const { return perm.size() - 1; }
  int degree() const { return perm.length(); }
  auto operator<=>(const PiKey&) const = default;
  bool operator==(const PiKey&) const = default;
};

using PiElem = LinComb<PiKey>;
using PiTensor = Tensor<PiKey, PiKey>;

/// "[231]".
std::string to_string(const PiKey& k);
PiKey parse_pikey(std::string_view text);
std::string render(const PiElem& x);
std::string render(const PiTensor& x);

/// The image of [π] in W.
WElem expand(const PiKey& k);
WElem expand(const PiElem& x);

/// Write x ∈ W as a combination of [σ]: every key must be a reduced word,
/// and the words of each σ must all carry the same coefficient and exhaust
/// 𝓡(σ). Throws InternalInconsistency otherwise.
PiElem regroup_pi(const WElem& x);
PiTensor regroup_pi(const Tensor<WKey, WKey>& x);

/// 𝒮⧢(u,v) ⊂ S_{m+n+1} for u ∈ S_{m+1}, v ∈ S_{n+1}, sorted.
std::vector<Permutation> s_shuffle(const Permutation& u, const Permutation& v);
/// ⊔_{(u,v)∈X×Y} 𝒮⧢(u,v), sorted; throws InternalInconsistency if the
/// pieces overlap.
std::vector<Permutation> s_shuffle(const std::vector<Permutation>& xs, const std::vector<Permutation>& ys);
/// 𝒮⧢(π¹, 𝒮⧢(π², …, πᵏ)), with 𝒮⧢(π) = {π}. Throws InvalidInput on an empty list.
std::vector<Permutation> s_shuffle_multi(const std::vector<Permutation>& seq);

PiElem pi_product(const PiKey& u, const PiKey& v);
PiElem pi_product(const PiElem& x, const PiElem& y);

/// Brute force: shuffle the reduced words of u with those of v (shifted) and
/// regroup by the permutation each word evaluates to.
PiElem pi_product_oracle(const PiKey& u, const PiKey& v);

/// The same check by path counting, without materialising the words: walks
/// interleavings of reduced-word prefixes of u and v, tracks the running
/// product in S_{m+n+1}, and requires every walk to stay reduced and every
/// endpoint σ to be reached by exactly r(σ) walks.
PiElem pi_product_oracle_counting(const PiKey& u, const PiKey& v);

/// The two-term rule for 321-avoiding u ∈ S_m, v ∈ S_n (result in S_{m+n−1}).
/// Throws InvalidInput unless both are 321-avoiding.
PiElem fc_product(const PiKey& u, const PiKey& v);

/// Σ over length-additive factorisations π = π′π″ of [π′]⊗[π″].
PiTensor pi_coproduct(const PiKey& u);
PiTensor pi_coproduct(const PiElem& x);
PiTensor pi_tensor_product(const PiTensor& x, const PiTensor& y);
Rational pi_counit(const PiKey& u);

/// fl maps 𝓡(π) bijectively onto ⊔_{σ∈𝒮⧢(π¹,…,πᵏ)} 𝓡(σ), where π¹⊕⋯⊕πᵏ
/// is the irreducible factorisation.
bool flatten_reduced_words_bijection_check(const Permutation& p);

/// [π] ↦ r(π)/ℓ(π)!.
Rational counting_character_pi(const PiKey& k);
Rational counting_character_pi(const PiElem& x);

}  // namespace cb
