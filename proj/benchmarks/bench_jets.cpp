#include <benchmark/benchmark.h>

#include "beurling/beurling.hpp"

using namespace beurling;

static void BM_JetCompose(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const Complex at{0.2, -0.1};
  const Jet inner = moebius_jet(Moebius(unit(0.3), {0.4, 0.2}), at, order);
  const Jet outer = SelfMap::inner(BlaschkeProduct(1, {{{0.1, 0.1}, 2}, {{-0.5, 0.3}, 1}})).jet(inner.value(), order);
  for (auto _ : state) benchmark::DoNotOptimize(compose(outer, inner));
  state.SetComplexityN(order);
}
BENCHMARK(BM_JetCompose)->RangeMultiplier(2)->Range(4, 128)->Complexity();

static void BM_SelfMapJet(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const InnerFunction theta(BlaschkeProduct(1, {{0.3, 2}}), AtomicMeasure({{0.5, 1}, {2.0, 0.5}}));
  const SelfMap phi = SelfMap::chain({SelfMap::moebius(Moebius::blaschke_factor(0.3)), SelfMap::inner(theta)});
  for (auto _ : state) benchmark::DoNotOptimize(phi.jet({0.1, 0.2}, order));
}
BENCHMARK(BM_SelfMapJet)->RangeMultiplier(4)->Range(4, 64);

BENCHMARK_MAIN();
