#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cb/composition.hpp"
#include "cb/qsym.hpp"
#include "cb/word_bialgebra.hpp"

namespace cb {

/// A linear functional on W, given on basis symbols.
struct ZetaFunctional {
  std::string name;
  std::function<Rational(const WKey&)> eval;

  Rational operator()(const WKey& a) const { return eval(a); }
  Rational operator()(const WElem& x) const;
};

/// ζ≤, ζ≥, ζ<, ζ>: 1 on weakly increasing / weakly decreasing / strictly
/// increasing / strictly decreasing words, 0 elsewhere.
enum class Monotone { le, ge, lt, gt };
ZetaFunctional zeta_basic(Monotone m);
Rational zeta_basic(Monotone m, const WKey& a);

/// (ζ₁ζ₂)([w,n]) = Σᵢ ζ₁([w₁⋯wᵢ,n]) ζ₂([wᵢ₊₁⋯,n]).
ZetaFunctional zeta_convolve(const ZetaFunctional& z1, const ZetaFunctional& z2);

/// ζ^B = 2^{−o_B}ζ_{>|≤}, ζ^C = ζ_{>|≤}, ζ^D = 2^{−o_D}ζ_{>|≤}.
ZetaFunctional zeta_B();
ZetaFunctional zeta_C();
ZetaFunctional zeta_D();

/// Looks up le, ge, lt, gt, gtle, ltge, gelt, legt, B, C, D.
ZetaFunctional zeta_by_name(std::string_view name);
/// The eight names with a closed form in psi_fast.
const std::vector<std::string>& fast_zeta_names();

/// Π ζ(block) over the deconcatenation of w into blocks of sizes α;
/// zero unless α ⊨ ℓ(w).
Rational zeta_alpha(const ZetaFunctional& z, const Composition& alpha, const WKey& a);

/// What psi does with a functional that fails the multiplicativity sample.
enum class CharacterPolicy { fail, warn, skip };

/// ζ(a·b) = ζ(a)ζ(b) over all pairs of symbols with frame ≤ 2 and at most
/// two letters; returns the first failing pair, if any, as text.
std::optional<std::string> multiplicativity_witness(const ZetaFunctional& z);

/// Ψ(x) = Σ_α ζ_α(x) M_α.
QSym psi(const ZetaFunctional& z, const WElem& x, CharacterPolicy policy = CharacterPolicy::fail);

/// Closed forms by descent, peak and valley sets, for the eight names of
/// fast_zeta_names().
QSym psi_fast(std::string_view name, const WKey& a);
QSym psi_fast(std::string_view name, const WElem& x);

/// Ψ^B = 2^{−o_B}Ψ_{>|≤}, Ψ^C = Ψ_{>|≤}, Ψ^D = 2^{−o_D}Ψ_{>|≤}, word by word.
QSym psi_B(const WElem& x);
QSym psi_C(const WElem& x);
QSym psi_D(const WElem& x);

}  // namespace cb
