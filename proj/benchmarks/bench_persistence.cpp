#include <benchmark/benchmark.h>

#include "pdrb/persistence.hpp"
#include "pdrb/random.hpp"

static void BM_ExtractMaxPairs(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  pdrb::Rng rng(6);
  std::vector<double> v(side * side);
  for (auto& x : v) x = rng.uniform(0, 1);
  const pdrb::ScalarGrid grid({side, side}, std::move(v));
  for (auto _ : state) benchmark::DoNotOptimize(pdrb::extract_max_pairs(grid, pdrb::Connectivity::Full).size());
  state.SetComplexityN(state.range(0) * state.range(0));
}
BENCHMARK(BM_ExtractMaxPairs)->RangeMultiplier(2)->Range(32, 512)->Complexity();
