#include <benchmark/benchmark.h>

#include "cb/morphisms.hpp"
#include "cb/pi_bialgebra.hpp"
#include "cb/qsym.hpp"
#include "cb/signed_modules.hpp"
#include "cb/stanley.hpp"
#include "cb/sym.hpp"

using namespace cb;

static void BM_ReducedWordCount(benchmark::State& state) {
  const auto w0 = Permutation::longest(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduced_word_count(w0));
}
BENCHMARK(BM_ReducedWordCount)->DenseRange(4, 8);

static void BM_ReducedWordsList(benchmark::State& state) {
  const auto w0 = Permutation::longest(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduced_words(w0));
}
BENCHMARK(BM_ReducedWordsList)->DenseRange(3, 6);

static void BM_StaircaseProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PiKey u{Permutation::longest((n + 1) / 2)}, v{Permutation::longest(n + 1 - (n + 1) / 2)};
  for (auto _ : state) benchmark::DoNotOptimize(pi_product(u, v));
}
BENCHMARK(BM_StaircaseProduct)->DenseRange(3, 9);

static void BM_ProductOracle(benchmark::State& state) {
  const PiKey u{parse_permutation("4132")}, v{parse_permutation("4213")};
  for (auto _ : state) benchmark::DoNotOptimize(pi_product_oracle(u, v));
}
BENCHMARK(BM_ProductOracle);

static void BM_ProductOracleCounting(benchmark::State& state) {
  const PiKey u{parse_permutation("4132")}, v{parse_permutation("4213")};
  for (auto _ : state) benchmark::DoNotOptimize(pi_product_oracle_counting(u, v));
}
BENCHMARK(BM_ProductOracleCounting);

static void BM_Coproduct(benchmark::State& state) {
  const PiKey w0{Permutation::longest(static_cast<int>(state.range(0)))};
  for (auto _ : state) benchmark::DoNotOptimize(pi_coproduct(w0));
}
BENCHMARK(BM_Coproduct)->DenseRange(3, 6);

static void BM_QSymProduct(benchmark::State& state) {
  const QSym x = k_to_m(Composition{2, 2});
  const QSym y = l_to_m(Composition{1, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(m_product(x, y));
}
BENCHMARK(BM_QSymProduct);

static void BM_StanleySchur(benchmark::State& state) {
  const auto w0 = Permutation::longest(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(expand_in_schur(stanley_F(w0)));
}
BENCHMARK(BM_StanleySchur)->DenseRange(3, 5);

static void BM_SchurP(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(schur_P(Composition{4, 2, 1}));
}
BENCHMARK(BM_SchurP);

static void BM_PsiGeneric(benchmark::State& state) {
  const auto z = zeta_by_name("gtle");
  const WElem x = WElem::term(WKey(Word{3, 1, 2, 4, 2, 1}, 4));
  for (auto _ : state) benchmark::DoNotOptimize(psi(z, x));
}
BENCHMARK(BM_PsiGeneric);

static void BM_PsiFast(benchmark::State& state) {
  const WKey a(Word{3, 1, 2, 4, 2, 1}, 4);
  for (auto _ : state) benchmark::DoNotOptimize(psi_fast("gtle", a));
}
BENCHMARK(BM_PsiFast);

static void BM_BModuleAction(benchmark::State& state) {
  const BPiKey u{parse_signed_permutation("1,-3,-2")};
  const PiKey v{parse_permutation("321")};
  for (auto _ : state) benchmark::DoNotOptimize(bmodule_action(u, v));
}
BENCHMARK(BM_BModuleAction);
BENCHMARK_MAIN();
