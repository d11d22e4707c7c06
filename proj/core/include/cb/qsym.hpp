#pragma once

#include <map>
#include <string>
#include <vector>
#include <string_view>

#include "cb/composition.hpp"
#include "cb/lincomb.hpp"

namespace cb {

/// A quasi-symmetric function, stored in the monomial basis.
using QSym = LinComb<Composition>;
/// Coefficients with respect to the L (fundamental) or K (peak) basis.
using LCoeffs = LinComb<Composition>;
using KCoeffs = LinComb<Composition>;
using QSymTensor = Tensor<Composition, Composition>;

/// Renderings with a basis prefix: "M[1,2] + 2*M[3]".
std::string render_basis(const LinComb<Composition>& x, std::string_view basis);
std::string render(const QSym& x);
std::string render(const QSymTensor& x);
/// Parses "M[1,2] + 2*M[3]"; the basis letter must match `basis`.
LinComb<Composition> parse_basis(std::string_view text, char basis);

QSym monomial(const Composition& a);

/// Quasi-shuffle product of monomials.
QSym m_product(const Composition& a, const Composition& b);
QSym m_product(const QSym& x, const QSym& y);
/// Deconcatenation: Δ(M_α) = Σ_{α=βγ} M_β ⊗ M_γ.
QSymTensor m_coproduct(const Composition& a);
QSymTensor m_coproduct(const QSym& x);
QSymTensor m_tensor_product(const QSymTensor& x, const QSymTensor& y);

/// L_α = Σ_{I(β)⊇I(α)} M_β.
QSym l_to_m(const Composition& a);
QSym l_to_m(const LCoeffs& x);
/// K_α = Σ_{I(α)⊆I(β)∪(I(β)+1)} 2^{ℓ(β)} M_β, for a peak composition α.
QSym k_to_m(const Composition& a);
QSym k_to_m(const KCoeffs& x);
/// Inverse of l_to_m.
LCoeffs m_to_l(const QSym& x);
/// Inverse of k_to_m; throws NotInSpan when x is outside the peak span.
KCoeffs m_to_k(const QSym& x);

/// L_β ↦ L_{βʳ} (equivalently M_β ↦ M_{βʳ}).
QSym reversal_involution(const QSym& x);
/// L_α ↦ L_{αᶜ}.
QSym omega(const QSym& x);
/// Θ: L_α ↦ K_{Λ(α)}.
QSym theta(const QSym& x);

/// Coefficients constant on rearrangements of each composition.
bool is_symmetric(const QSym& x);

/// A polynomial in finitely many variables, keyed by exponent vectors.
using Polynomial = std::map<std::vector<int>, Rational>;
/// x truncated to the variables x₁,…,x_k. Faithful on weight ≤ k.
Polynomial to_polynomial(const QSym& x, int k);
Polynomial poly_multiply(const Polynomial& a, const Polynomial& b);

}  // namespace cb
