#include <benchmark/benchmark.h>

#include "beurling/beurling.hpp"

using namespace beurling;

static void BM_SupQuotient(benchmark::State& state) {
  const InnerFunction theta(BlaschkeProduct(1, {{0, 1}}), AtomicMeasure({{0, 1}}), -1);
  const SelfMap phi = SelfMap::chain({SelfMap::scale(-1), SelfMap::inner(theta)});
  GridSpec grid;
  grid.angular_count = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sup_quotient(theta, phi, theta, grid));
  state.SetItemsProcessed(state.iterations() * grid.angular_count * static_cast<int64_t>(grid.radii.size()));
}
BENCHMARK(BM_SupQuotient)->RangeMultiplier(4)->Range(256, 4096)->Unit(benchmark::kMillisecond);

static void BM_SupQuotientNear(benchmark::State& state) {
  const Complex a1{0.4, 0.1}, a2{-0.3, 0.2};
  const BlaschkeProduct b(1, {{a1, 3}, {a2, 2}});
  const SelfMap phi = SelfMap::chain(
      {SelfMap::moebius(Moebius::blaschke_factor(a2)), SelfMap::inner(BlaschkeProduct(1, {{a1, 1}, {a2, 1}}))});
  const InnerFunction theta(b, {});
  const Verdict v = decide_blaschke(b, phi, b);
  const RefinementTargets targets = witness_targets(v);
  for (auto _ : state) benchmark::DoNotOptimize(sup_quotient_near(theta, phi, theta, targets));
}
BENCHMARK(BM_SupQuotientNear)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
