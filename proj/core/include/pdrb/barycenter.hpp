#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pdrb/assignment.hpp"
#include "pdrb/diagram.hpp"
#include "pdrb/ground_barycenter.hpp"
#include "pdrb/metric.hpp"

namespace pdrb {

struct BarycenterInit {
  enum class Kind { FirstDiagram, Index };
  Kind kind = Kind::FirstDiagram;
  std::size_t index = 0;

  static BarycenterInit first_diagram() { return {}; }
  static BarycenterInit at(std::size_t i) { return {Kind::Index, i}; }
};

/// How each barycenter point is moved once the plans are fixed.
enum class UpdateRule {
  GroundBarycenter,  // argmin of the weighted q-th power distances (any q)
  ArithmeticMean,    // weighted mean of the matched points (optimal only for q = 2)
};

struct BarycenterConfig {
  double q = 2.0;
  std::vector<double> weights;  // empty means uniform
  std::size_t max_outer_iters = 10;
  GroundOptions ground;
  double epsilon = 0.0;  // persistence threshold applied to the output
  double stop_displacement = 1e-7;
  BarycenterInit init;
  UpdateRule update = UpdateRule::GroundBarycenter;
  DiagonalCost diagonal_cost = DiagonalCost::Augmented;
  bool allow_q1 = false;  // q = 1 minimisers need not be unique
};

/// Point matched to one barycenter point in one input's plan.
struct MatchedTarget {
  Point2 point;
  bool diagonal = false;   // an augmented diagonal point, not a point of the input
  std::size_t source = 0;  // index in the input diagram when !diagonal
};

/// targets[k][i] is the point matched to barycenter point k in the plan to input i.
struct Matching {
  std::vector<TransportPlan> plans;
  std::vector<std::vector<MatchedTarget>> targets;
  double energy = 0.0;  // sum_i w_i * plans[i].total_cost
};

[[nodiscard]] Matching match_to_ensemble(std::span<const DiagramPoint> barycenter,
                                         std::span<const PersistenceDiagram> ensemble,
                                         std::span<const double> weights, double q,
                                         DiagonalCost mode = DiagonalCost::Augmented);

/// Frechet energy sum_i w_i W_q^q(B, X_i) with exact assignments.
[[nodiscard]] double frechet_energy(const PersistenceDiagram& barycenter,
                                    std::span<const PersistenceDiagram> ensemble,
                                    std::span<const double> weights, double q,
                                    DiagonalCost mode = DiagonalCost::Augmented);

struct BarycenterResult {
  PersistenceDiagram diagram;          // final iterate pruned with config.epsilon
  std::vector<DiagramPoint> working;   // final iterate before pruning
  std::vector<double> energy_trace;    // E(B^0), E(B^1), ... one entry per iterate
  std::size_t iterations = 0;          // outer iterations performed
  bool converged = false;              // stopped on the displacement criterion
};

/// Throws std::invalid_argument for an empty ensemble, bad weights, T = 0,
/// q < 1, or q = 1 without allow_q1.
void validate_barycenter_config(std::span<const PersistenceDiagram> ensemble, const BarycenterConfig& config);

/// Weights from the config, or uniform weights when none were given.
[[nodiscard]] std::vector<double> resolve_weights(std::size_t m, const BarycenterConfig& config);

/// One update step with fixed plans: moves every barycenter point to the
/// ground barycenter (or weighted mean) of its matched targets. Points whose
/// positive-weight targets are all diagonal are snapped onto the diagonal.
/// Under UpdateRule::GroundBarycenter a point keeps its position when that
/// position already scores no worse than the solver's answer.
[[nodiscard]] std::vector<DiagramPoint> update_barycenter(std::span<const DiagramPoint> barycenter,
                                                          const Matching& matching,
                                                          std::span<const double> weights,
                                                          const BarycenterConfig& config);

/// Alternates optimal assignment against every input and per-point ground
/// barycenter updates, for at most config.max_outer_iters iterations or
/// until no point moves more than config.stop_displacement.
[[nodiscard]] BarycenterResult compute_barycenter(std::span<const PersistenceDiagram> ensemble,
                                                  const BarycenterConfig& config);

}  // namespace pdrb
