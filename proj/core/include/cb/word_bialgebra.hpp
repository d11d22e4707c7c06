#pragma once

#include <string>
#include <string_view>

#include "cb/lincomb.hpp"
#include "cb/word.hpp"

namespace cb {

/// The basis symbol [w,n] of W; requires max(w) ≤ n.
struct WKey {
  Word word;
  int frame = 0;

  WKey() = default;
  WKey(Word w, int n);

  int degree() const { return static_cast<int>(word.size()); }
  auto operator<=>(const WKey&) const = default;
  bool operator==(const WKey&) const = default;
};

using WElem = LinComb<WKey>;

/// "[125;5]"; the empty word renders as "[;n]".
std::string to_string(const WKey& k);
WKey parse_wkey(std::string_view text);

std::string render(const WElem& x);
std::string render(const Tensor<WKey, WKey>& x);

/// [v,m]·[w,n] = [v ⧢ (w↑m), m+n].
WElem w_product(const WKey& a, const WKey& b);
WElem w_product(const WElem& x, const WElem& y);

/// Deconcatenation with frames kept on both legs.
Tensor<WKey, WKey> w_coproduct(const WKey& a);
Tensor<WKey, WKey> w_coproduct(const WElem& x);
/// (x⊗y)(x'⊗y') = xx' ⊗ yy' in W⊗W.
Tensor<WKey, WKey> w_tensor_product(const Tensor<WKey, WKey>& x, const Tensor<WKey, WKey>& y);

Rational w_counit(const WKey& a);
Rational w_counit(const WElem& x);

/// [w,n] ↦ 1/ℓ(w)!.
Rational counting_character(const WKey& a);
Rational counting_character(const WElem& x);

/// The packed representative fl(w) of [w,n] modulo the packed-word bi-ideal.
Word pack_project(const WKey& a);

}  // namespace cb
