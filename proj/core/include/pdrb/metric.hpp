#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pdrb/assignment.hpp"
#include "pdrb/diagram.hpp"

namespace pdrb {

/// Throws std::invalid_argument unless q is finite and >= 1.
void require_valid_q(double q);

/// Optimal transport plan between two diagrams together with the augmented
/// pair it was computed on. `assignment.total_cost` is W_q^q.
struct TransportPlan {
  AugmentedPair pair;
  Assignment assignment;
};

[[nodiscard]] TransportPlan optimal_plan(std::span<const DiagramPoint> x, std::span<const DiagramPoint> y,
                                         double q, DiagonalCost mode = DiagonalCost::Augmented);

/// W_q^q(X, Y): the minimum total cost over bijections of the augmented pair.
[[nodiscard]] double wasserstein_cost(const PersistenceDiagram& x, const PersistenceDiagram& y, double q,
                                      DiagonalCost mode = DiagonalCost::Augmented);

/// W_q(X, Y) = wasserstein_cost(X, Y, q)^(1/q).
[[nodiscard]] double wasserstein_distance(const PersistenceDiagram& x, const PersistenceDiagram& y,
                                          double q, DiagonalCost mode = DiagonalCost::Augmented);

struct DistanceMatrix {
  std::size_t size = 0;
  std::vector<double> entries;  // row-major, size x size
  double q = 2.0;

  [[nodiscard]] double operator()(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
};

/// Pairwise W_q over an ensemble. Entries are computed for i < j and mirrored.
[[nodiscard]] DistanceMatrix distance_matrix(std::span<const PersistenceDiagram> ensemble, double q,
                                             DiagonalCost mode = DiagonalCost::Augmented);

}  // namespace pdrb
