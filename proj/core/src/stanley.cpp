#include "cb/stanley.hpp"

#include "cb/morphisms.hpp"
#include "cb/signed_modules.hpp"

namespace cb {

QSym stanley_F(const Permutation& p) {
  QSym out;
  for (const auto& w : reduced_words(p))
    out += l_to_m(comp_complement(Composition::from_set(descents(w), static_cast<int>(w.size()))));
  return out;
}

QSym stanley_FB(const SignedPermutation& p) { return psi_B(expand(BPiKey{p})); }

QSym stanley_FC(const SignedPermutation& p) { return psi_C(expand(BPiKey{p})); }

QSym stanley_FD(const SignedPermutation& p) {
  if (!p.in_d()) return {};
  return psi_D(expand(DPiKey{p}));
}

bool counting_morphism_check(const PiKey& u, const PiKey& v) {
  return counting_character_pi(pi_product(u, v)) == counting_character_pi(u) * counting_character_pi(v);
}

}  // namespace cb
