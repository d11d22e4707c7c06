#include <gtest/gtest.h>

#include <random>

#include "cb/error.hpp"
#include "cb/morphisms.hpp"
#include "cb/pi_bialgebra.hpp"
#include "cb/signed_modules.hpp"

using namespace cb;

namespace {
WKey key(const char* s) { return parse_wkey(s); }

std::vector<WKey> keys_up_to(int max_len, int frame) {
  std::vector<WKey> out;
  std::vector<Word> words{Word{}};
  for (std::size_t start = 0, len = 0; static_cast<int>(len) < max_len; ++len) {
    const std::size_t end = words.size();
    for (std::size_t i = start; i < end; ++i)
      for (int a = 1; a <= frame; ++a) {
        auto l = words[i].letters();
        l.push_back(a);
        words.emplace_back(l);
      }
    start = end;
  }
  for (auto& w : words) out.emplace_back(w, frame);
  return out;
}
}  // namespace

TEST(Morphisms, BasicZeta) {
  EXPECT_EQ(zeta_basic(Monotone::gt, key("[21;2]")), 1);
  EXPECT_EQ(zeta_basic(Monotone::lt, key("[12;3]")), 1);
  EXPECT_EQ(zeta_basic(Monotone::lt, key("[21;3]")), 0);
  EXPECT_EQ(zeta_basic(Monotone::le, WKey(Word{}, 5)), 1);
  EXPECT_EQ(zeta_basic(Monotone::le, key("[11;1]")), 1);
  EXPECT_EQ(zeta_basic(Monotone::lt, key("[11;1]")), 0);
}

TEST(Morphisms, Convolution) {
  const auto z = zeta_by_name("gtle");
  EXPECT_EQ(z(WKey(Word{}, 2)), 1);
  EXPECT_EQ(z(key("[3113;3]")), 2);
  EXPECT_EQ(z(key("[1;1]")), 2);
  EXPECT_EQ(z(key("[121;2]")), 0);
  // the counit is the unit for convolution
  ZetaFunctional counit{"e", [](const WKey& a) { return w_counit(a); }};
  const auto le = zeta_basic(Monotone::le);
  for (const auto& a : keys_up_to(3, 2)) {
    EXPECT_EQ(zeta_convolve(le, counit)(a), le(a));
    EXPECT_EQ(zeta_convolve(counit, le)(a), le(a));
  }
}

TEST(Morphisms, ZetaAlpha) {
  const auto le = zeta_basic(Monotone::le);
  const auto a = key("[312;3]");
  EXPECT_EQ(zeta_alpha(le, Composition{3}, a), le(a));
  EXPECT_EQ(zeta_alpha(le, Composition{2}, a), 0);
  EXPECT_EQ(zeta_alpha(le, Composition{1, 1, 1}, a), 1);
}

TEST(Morphisms, PsiExamples) {
  EXPECT_EQ(psi(zeta_basic(Monotone::le), WElem::term(key("[312;3]"))),
            l_to_m(Composition::from_set({1}, 3)));
  EXPECT_EQ(psi(zeta_basic(Monotone::le), WElem::term(WKey(Word{}, 3))), monomial(Composition{}));
  EXPECT_EQ(psi_fast("gt", key("[21;2]")), l_to_m(Composition{2}));
  EXPECT_EQ(psi_fast("le", key("[12;3]")), l_to_m(Composition{2}));
  EXPECT_EQ(psi_fast("gtle", key("[1321;3]")), k_to_m(Composition::from_set(peaks(Word{1, 3, 2, 1}), 4)));
  EXPECT_EQ(psi_fast("ltge", key("[3123;3]")), k_to_m(Composition::from_set(valleys(Word{3, 1, 2, 3}), 4)));
}

TEST(Morphisms, PsiAgreesWithClosedForms) {
  for (const auto& name : fast_zeta_names()) {
    const auto z = zeta_by_name(name);
    for (const auto& a : keys_up_to(5, 3)) ASSERT_EQ(psi(z, WElem::term(a)), psi_fast(name, a)) << name << to_string(a);
  }
}

TEST(Morphisms, PsiIsMultiplicative) {
  std::mt19937 gen(5);
  const auto keys = keys_up_to(3, 2);
  std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
  for (const char* name : {"le", "ge", "lt", "gt", "gtle", "ltge", "gelt", "legt", "C"}) {
    const auto z = zeta_by_name(name);
    EXPECT_FALSE(multiplicativity_witness(z).has_value()) << name;
    for (int i = 0; i < 40; ++i) {
      const auto &a = keys[pick(gen)], &b = keys[pick(gen)];
      ASSERT_EQ(psi(z, w_product(a, b)), m_product(psi(z, WElem::term(a)), psi(z, WElem::term(b))))
          << name << " " << to_string(a) << " " << to_string(b);
    }
  }
}

TEST(Morphisms, WeightedFunctionalsAreNotCharacters) {
  EXPECT_TRUE(multiplicativity_witness(zeta_B()).has_value());
  EXPECT_THROW(psi(zeta_B(), WElem::term(key("[1;1]"))), InvalidInput);
  EXPECT_NO_THROW(psi(zeta_B(), WElem::term(key("[1;1]")), CharacterPolicy::skip));
}

TEST(Morphisms, PsiIsCoalgebraMorphismOnPermutations) {
  const auto gt = zeta_basic(Monotone::gt);
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : all_permutations(n)) {
      const auto lhs = m_coproduct(psi(gt, expand(PiKey{p})));
      QSymTensor rhs;
      for (const auto& [k, c] : pi_coproduct(PiKey{p}))
        rhs += tensor(psi(gt, expand(k.first)), psi(gt, expand(k.second)));
      ASSERT_EQ(lhs, rhs) << to_string(p);
    }
}

TEST(Morphisms, SignedPsiIsModuleMorphism) {
  for (const auto& p : all_signed_permutations(2))
    for (const auto& v : all_permutations(3)) {
      const auto x = bmodule_action(BPiKey{p}, PiKey{v});
      ASSERT_EQ(psi_B(expand(x)), m_product(psi_B(expand(BPiKey{p})), psi_C(expand(PiKey{v}))));
      if (!p.in_d()) continue;
      const auto y = dmodule_action(DPiKey{p}, PiKey{v});
      ASSERT_EQ(psi_D(expand(y)), m_product(psi_D(expand(DPiKey{p})), psi_C(expand(PiKey{v}))));
    }
}
