#include <benchmark/benchmark.h>

#include "pdrb/metric.hpp"
#include "pdrb/random.hpp"

namespace {

pdrb::PersistenceDiagram diagram(pdrb::Rng& rng, std::size_t n) {
  std::vector<pdrb::DiagramPoint> pts;
  for (std::size_t i = 0; i < n; ++i) {
    const double b = rng.uniform(0, 1);
    pts.push_back({b, b + rng.uniform(0.01, 1)});
  }
  return pdrb::PersistenceDiagram(std::move(pts));
}

}  // namespace

static void BM_Wasserstein(benchmark::State& state) {
  pdrb::Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = diagram(rng, n), y = diagram(rng, n);
  const double q = static_cast<double>(state.range(1)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(pdrb::wasserstein_distance(x, y, q));
}
BENCHMARK(BM_Wasserstein)->ArgsProduct({{10, 50, 100}, {12, 20}});

static void BM_DistanceMatrix(benchmark::State& state) {
  pdrb::Rng rng(3);
  std::vector<pdrb::PersistenceDiagram> e;
  for (int i = 0; i < state.range(0); ++i) e.push_back(diagram(rng, 30));
  for (auto _ : state) benchmark::DoNotOptimize(pdrb::distance_matrix(e, 2.0).entries.data());
}
BENCHMARK(BM_DistanceMatrix)->Arg(8)->Arg(16)->UseRealTime();
