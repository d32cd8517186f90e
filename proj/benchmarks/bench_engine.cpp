#include <benchmark/benchmark.h>

#include "beurling/beurling.hpp"

using namespace beurling;

static void BM_DecideBlaschke(benchmark::State& state) {
  ParameterPool pool(1);
  FamilySpec spec = pool.spec(FamilyKind::fix_all_to_aj, static_cast<int>(state.range(0)), 4);
  const BlaschkeProduct b = family_blaschke(spec);
  const SelfMap phi = generate(spec);
  for (auto _ : state) benchmark::DoNotOptimize(decide_blaschke(b, phi, b));
}
BENCHMARK(BM_DecideBlaschke)->DenseRange(1, 4);

static void BM_DecideDerivative(benchmark::State& state) {
  ParameterPool pool(2);
  FamilySpec spec = pool.spec(FamilyKind::two_zero_unequal);
  const BlaschkeProduct b = family_blaschke(spec);
  const SelfMap phi = generate(spec);
  for (auto _ : state) benchmark::DoNotOptimize(decide_derivative(b, phi));
}
BENCHMARK(BM_DecideDerivative);

static void BM_RigidityScan(benchmark::State& state) {
  const BlaschkeProduct b(1, {{{0.1, 0.2}, 1}, {{-0.4, 0.1}, 2}, {{0.3, -0.5}, 3}, {{-0.2, -0.6}, 4}});
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_rigidity_scan(b, 20));
}
BENCHMARK(BM_RigidityScan)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
