#pragma once

#include "cb/permutation.hpp"
#include "cb/pi_bialgebra.hpp"
#include "cb/qsym.hpp"
#include "cb/signed_permutation.hpp"

namespace cb {

/// F_π = Σ_{w∈𝓡(π)} L_{αᶜ} with I(α) = Des(w).
QSym stanley_F(const Permutation& p);
/// F^B_π = Σ_{w∈𝓡^B(π)} 2^{−o_B(w)} K_{Peak(w)}.
QSym stanley_FB(const SignedPermutation& p);
/// F^C_π = 2^{ℓ₀(π)} F^B_π.
QSym stanley_FC(const SignedPermutation& p);
/// F^D_π = Σ_{w∈𝓡^D(π)} 2^{−o_D(w)} K_{Peak(w)}; zero off D_n.
QSym stanley_FD(const SignedPermutation& p);

/// r(·)/ℓ(·)! is multiplicative on [u]·[v].
bool counting_morphism_check(const PiKey& u, const PiKey& v);

}  // namespace cb
