#include <benchmark/benchmark.h>

#include "pdrb/assignment.hpp"
#include "pdrb/random.hpp"

static void BM_SolveAssignment(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  pdrb::Rng rng(1);
  std::vector<double> e(k * k);
  for (auto& x : e) x = rng.uniform(0, 1);
  const pdrb::CostMatrix c(k, std::move(e));
  for (auto _ : state) benchmark::DoNotOptimize(pdrb::solve_assignment(c).total_cost);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveAssignment)->RangeMultiplier(2)->Range(8, 512)->Complexity(benchmark::oNCubed);

static void BM_BruteForceAssignment(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  pdrb::Rng rng(1);
  std::vector<double> e(k * k);
  for (auto& x : e) x = rng.uniform(0, 1);
  const pdrb::CostMatrix c(k, std::move(e));
  for (auto _ : state) benchmark::DoNotOptimize(pdrb::brute_force_assignment(c).total_cost);
}
BENCHMARK(BM_BruteForceAssignment)->DenseRange(4, 8, 2);
