#pragma once

#include <string>

#include "cb/composition.hpp"
#include "cb/qsym.hpp"

namespace cb {

/// Partitions and strict partitions reuse Composition with the obvious
/// shape predicates (is_partition, is_strict_partition).
using Partition = Composition;

/// m_λ = Σ_{sort(α)=λ} M_α.
QSym monomial_sym(const Partition& lambda);
/// s_λ via Kostka numbers counted by horizontal strips.
QSym schur_s(const Partition& lambda);
/// Q_λ via marked shifted tableaux; λ strict.
QSym schur_Q(const Partition& lambda);
/// P_λ: as Q_λ but with unprimed diagonal entries; λ strict.
QSym schur_P(const Partition& lambda);

/// Number of semistandard tableaux of shape λ and content α.
BigInt kostka(const Partition& lambda, const Composition& content);

/// Coefficients in the s basis; throws NotInSpan on non-symmetric input.
LinComb<Partition> expand_in_schur(const QSym& x);
/// Coefficients in the P basis; throws NotInSpan outside the span.
LinComb<Partition> expand_in_P(const QSym& x);

/// "s[3,2,1]", "P[4,2]".
std::string render_schur(const LinComb<Partition>& x);
std::string render_P(const LinComb<Partition>& x);

}  // namespace cb
