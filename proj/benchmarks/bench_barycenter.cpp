#include <benchmark/benchmark.h>

#include "pdrb/barycenter.hpp"
#include "pdrb/random.hpp"

static void BM_GroundBarycenter(benchmark::State& state) {
  pdrb::Rng rng(4);
  std::vector<pdrb::Point2> y(static_cast<std::size_t>(state.range(0)));
  for (auto& p : y) p = {rng.uniform(0, 1), rng.uniform(0, 1)};
  const std::vector<double> w(y.size(), 1.0 / static_cast<double>(y.size()));
  const pdrb::GroundProblem problem(y, w, static_cast<double>(state.range(1)) / 10.0);
  for (auto _ : state) benchmark::DoNotOptimize(pdrb::ground_barycenter(problem).point);
}
BENCHMARK(BM_GroundBarycenter)->ArgsProduct({{4, 16}, {10, 12, 15, 20}});

static void BM_Barycenter(benchmark::State& state) {
  pdrb::Rng rng(5);
  std::vector<pdrb::PersistenceDiagram> e;
  for (int i = 0; i < 6; ++i) {
    std::vector<pdrb::DiagramPoint> pts;
    for (int k = 0; k < state.range(0); ++k) {
      const double b = rng.uniform(0, 1);
      pts.push_back({b, b + rng.uniform(0.05, 1)});
    }
    e.emplace_back(std::move(pts));
  }
  pdrb::BarycenterConfig c;
  c.q = static_cast<double>(state.range(1)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(pdrb::compute_barycenter(e, c).energy_trace.back());
}
BENCHMARK(BM_Barycenter)->ArgsProduct({{10, 40}, {12, 20}})->UseRealTime();
