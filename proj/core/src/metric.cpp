#include "pdrb/metric.hpp"

#include <cmath>
#include <stdexcept>

#include "pdrb/parallel.hpp"

namespace pdrb {

void require_valid_q(double q) {
  if (!std::isfinite(q) || q < 1.0) throw std::invalid_argument("q must be a finite real >= 1");
}

TransportPlan optimal_plan(std::span<const DiagramPoint> x, std::span<const DiagramPoint> y, double q,
                           DiagonalCost mode) {
  require_valid_q(q);
  TransportPlan plan{augment(x, y), {}};
  plan.assignment = solve_assignment(build_cost_matrix(plan.pair, q, mode));
  return plan;
}

double wasserstein_cost(const PersistenceDiagram& x, const PersistenceDiagram& y, double q,
                        DiagonalCost mode) {
  return optimal_plan(x.points(), y.points(), q, mode).assignment.total_cost;
}

double wasserstein_distance(const PersistenceDiagram& x, const PersistenceDiagram& y, double q,
                            DiagonalCost mode) {
  const double cost = wasserstein_cost(x, y, q, mode);
  if (q == 1.0) return cost;
  if (q == 2.0) return std::sqrt(cost);
  return std::pow(cost, 1.0 / q);
}

DistanceMatrix distance_matrix(std::span<const PersistenceDiagram> ensemble, double q, DiagonalCost mode) {
  require_valid_q(q);
  const std::size_t n = ensemble.size();
  DistanceMatrix m{n, std::vector<double>(n * n, 0.0), q};

  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) jobs.emplace_back(i, j);

  parallel_for(jobs.size(), [&](std::size_t k) {
    const auto [i, j] = jobs[k];
    const double d = wasserstein_distance(ensemble[i], ensemble[j], q, mode);
    m.entries[i * n + j] = d;
    m.entries[j * n + i] = d;
  });
  return m;
}

}  // namespace pdrb
