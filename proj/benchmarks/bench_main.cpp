#include <benchmark/benchmark.h>

#include "tautcalc/canonical.hpp"
#include "tautcalc/enumerate.hpp"
#include "tautcalc/expand.hpp"
#include "tautcalc/expr_parser.hpp"
#include "tautcalc/loci.hpp"
#include "tautcalc/pairing.hpp"
#include "tautcalc/witten.hpp"

using namespace tautcalc;

// Cold cache: every iteration recomputes through the string equation recursion.
static void BM_TauCold(benchmark::State& state) {
  for (auto _ : state) {
    witten::clear_cache();
    benchmark::DoNotOptimize(tau(2, {1, 1, 1, 1, 1, 1, 4}));
  }
}
BENCHMARK(BM_TauCold);

static void BM_CanonicalizeCodim3(benchmark::State& state) {
  const auto graphs = enumerate_graphs({2, 3}, 3);
  for (auto _ : state)
    for (const auto& g : graphs) benchmark::DoNotOptimize(canonicalize(g));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(graphs.size()));
}
BENCHMARK(BM_CanonicalizeCodim3);

static void BM_EnumerateStrata(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_graphs({2, 3}, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateStrata)->DenseRange(0, 4);

static void BM_ExpandHyp22(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(loci::hyp22_divisor_form());
}
BENCHMARK(BM_ExpandHyp22);

static void BM_IntegratePsi4(benchmark::State& state) {
  const GeneratorExpr e = parse_expr("psi1^4", {2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(integrate(expand(e, {2, 1})));
}
BENCHMARK(BM_IntegratePsi4);

static void BM_PairingVectorHyp22(benchmark::State& state) {
  const TautClass x = loci::hyp22_divisor_form();
  const auto tests = spanning_set({2, 2}, 3);
  for (auto _ : state) benchmark::DoNotOptimize(pairing_vector(x, tests));
  state.counters["tests"] = static_cast<double>(tests.size());
}
BENCHMARK(BM_PairingVectorHyp22)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
