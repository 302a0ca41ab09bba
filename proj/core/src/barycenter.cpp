#include "pdrb/barycenter.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "pdrb/parallel.hpp"

namespace pdrb {

namespace {

// Ascending-order sum, so the result does not depend on the input order.
double ordered_sum(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double total = 0.0;
  for (double v : values) total += v;
  return total;
}

}  // namespace

Matching match_to_ensemble(std::span<const DiagramPoint> barycenter,
                           std::span<const PersistenceDiagram> ensemble, std::span<const double> weights,
                           double q, DiagonalCost mode) {
  const std::size_t m = ensemble.size();
  if (weights.size() != m) throw std::invalid_argument("one weight per input diagram is required");

  Matching out;
  out.plans.resize(m);
  parallel_for(m, [&](std::size_t i) {
    out.plans[i] = optimal_plan(barycenter, ensemble[i].points(), q, mode);
  });

  out.targets.assign(barycenter.size(), std::vector<MatchedTarget>(m));
  for (std::size_t i = 0; i < m; ++i) {
    const auto& plan = out.plans[i];
    for (std::size_t k = 0; k < barycenter.size(); ++k) {
      const std::size_t j = plan.assignment.permutation[k];
      const auto& target = plan.pair.right[j];
      out.targets[k][i] = {to_point(target.point), target.on_diagonal(), target.on_diagonal() ? 0 : j};
    }
  }
  std::vector<double> terms(m);
  for (std::size_t i = 0; i < m; ++i) terms[i] = weights[i] * out.plans[i].assignment.total_cost;
  out.energy = ordered_sum(std::move(terms));
  return out;
}

double frechet_energy(const PersistenceDiagram& barycenter, std::span<const PersistenceDiagram> ensemble,
                      std::span<const double> weights, double q, DiagonalCost mode) {
  if (weights.size() != ensemble.size())
    throw std::invalid_argument("one weight per input diagram is required");
  require_valid_q(q);
  std::vector<double> costs(ensemble.size());
  parallel_for(ensemble.size(), [&](std::size_t i) {
    costs[i] = wasserstein_cost(barycenter, ensemble[i], q, mode);
  });
  for (std::size_t i = 0; i < costs.size(); ++i) costs[i] *= weights[i];
  return ordered_sum(std::move(costs));
}

void validate_barycenter_config(std::span<const PersistenceDiagram> ensemble, const BarycenterConfig& config) {
  if (ensemble.empty()) throw std::invalid_argument("barycenter of an empty ensemble");
  require_valid_q(config.q);
  if (config.q == 1.0 && !config.allow_q1)
    throw std::invalid_argument(
        "q = 1 ground barycenters are not unique in general and the iteration may be numerically "
        "unstable; enable allow_q1 to proceed anyway");
  if (config.max_outer_iters == 0) throw std::invalid_argument("at least one outer iteration is required");
  if (!(config.epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
  if (config.init.kind == BarycenterInit::Kind::Index && config.init.index >= ensemble.size())
    throw std::invalid_argument("barycenter init index out of range");
  if (!config.weights.empty()) {
    if (config.weights.size() != ensemble.size())
      throw std::invalid_argument("one weight per input diagram is required");
    double sum = 0.0;
    for (double w : config.weights) {
      if (!(w >= 0.0)) throw std::invalid_argument("barycenter weights must be non-negative");
      sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("barycenter weights must sum to 1");
  }
}

std::vector<double> resolve_weights(std::size_t m, const BarycenterConfig& config) {
  if (!config.weights.empty()) return config.weights;
  return std::vector<double>(m, 1.0 / static_cast<double>(m));
}

std::vector<DiagramPoint> update_barycenter(std::span<const DiagramPoint> barycenter, const Matching& matching,
                                            std::span<const double> weights, const BarycenterConfig& config) {
  std::vector<DiagramPoint> next(barycenter.size());
  parallel_for(barycenter.size(), [&](std::size_t k) {
    // Sorted (target, weight) pairs make the update independent of input order.
    std::vector<std::tuple<double, double, double>> sorted;
    bool all_diagonal = true;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] <= 0.0) continue;
      const auto& t = matching.targets[k][i];
      sorted.emplace_back(t.point.x, t.point.y, weights[i]);
      all_diagonal = all_diagonal && t.diagonal;
    }
    if (all_diagonal) {
      next[k] = project_to_diagonal(barycenter[k]);
      return;
    }
    std::sort(sorted.begin(), sorted.end());
    std::vector<Point2> targets;
    std::vector<double> w;
    for (const auto& [x, y, wi] : sorted) {
      targets.push_back({x, y});
      w.push_back(wi);
    }
    const double total = ordered_sum(w);
    for (double& wi : w) wi /= total;
    const GroundProblem problem(std::move(targets), std::move(w), config.q);

    if (config.update == UpdateRule::ArithmeticMean) {
      next[k] = to_diagram_point(weighted_mean(problem));
      return;
    }
    const auto solution = ground_barycenter(problem, config.ground);
    const Point2 current = to_point(barycenter[k]);
    next[k] = v_q(problem, current) <= solution.value ? barycenter[k] : to_diagram_point(solution.point);
  });
  return next;
}

BarycenterResult compute_barycenter(std::span<const PersistenceDiagram> ensemble, const BarycenterConfig& config) {
  validate_barycenter_config(ensemble, config);
  const auto weights = resolve_weights(ensemble.size(), config);
  const std::size_t start = config.init.kind == BarycenterInit::Kind::Index ? config.init.index : 0;

  BarycenterResult result;
  std::vector<DiagramPoint> current(ensemble[start].points().begin(), ensemble[start].points().end());
  Matching matching = match_to_ensemble(current, ensemble, weights, config.q, config.diagonal_cost);
  result.energy_trace.push_back(matching.energy);

  for (std::size_t t = 0; t < config.max_outer_iters; ++t) {
    auto next = update_barycenter(current, matching, weights, config);

    double displacement = 0.0;
    for (std::size_t k = 0; k < next.size(); ++k)
      displacement = std::max(displacement, std::hypot(next[k].birth - current[k].birth,
                                                       next[k].death - current[k].death));
    // Points snapped onto the diagonal carry no energy; drop them from the iterate.
    std::erase_if(next, [](const DiagramPoint& p) { return p.death <= p.birth; });

    current = std::move(next);
    matching = match_to_ensemble(current, ensemble, weights, config.q, config.diagonal_cost);
    result.energy_trace.push_back(matching.energy);
    result.iterations = t + 1;
    if (displacement <= config.stop_displacement) {
      result.converged = true;
      break;
    }
  }

  result.working = current;
  std::vector<DiagramPoint> kept;
  for (const auto& p : current)
    if (p.persistence() > config.epsilon) kept.push_back(p);
  result.diagram = PersistenceDiagram(std::move(kept));
  return result;
}

}  // namespace pdrb
