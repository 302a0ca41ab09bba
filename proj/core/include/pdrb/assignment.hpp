#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pdrb/diagram.hpp"

namespace pdrb {

/// Square matrix of finite, non-negative transport costs, row-major.
class CostMatrix {
 public:
  CostMatrix() = default;
  CostMatrix(std::size_t size, std::vector<double> entries);

  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  [[nodiscard]] double operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }
  [[nodiscard]] std::span<const double> row(std::size_t i) const {
    return {entries_.data() + i * size_, size_};
  }
  [[nodiscard]] const std::vector<double>& entries() const noexcept { return entries_; }

 private:
  std::size_t size_ = 0;
  std::vector<double> entries_;
};

/// How an off-diagonal point is charged when matched to a DIAGONAL-flagged
/// point of the augmented pair.
enum class DiagonalCost {
  /// ||x - y||^q to the specific augmented projection y (literal cost).
  Augmented,
  /// ||x - proj(x)||^q, the distance to the nearest diagonal point,
  /// regardless of which diagonal slot is used.
  Perpendicular,
};

/// Cost c_q between two augmented points: zero when both are diagonal,
/// ||x - y||^q otherwise.
[[nodiscard]] double transport_cost(const AugmentedPoint& x, const AugmentedPoint& y, double q,
                                    DiagonalCost mode = DiagonalCost::Augmented);

/// Throws std::invalid_argument when q < 1 or q is not finite.
[[nodiscard]] CostMatrix build_cost_matrix(const AugmentedPair& pair, double q,
                                           DiagonalCost mode = DiagonalCost::Augmented);

struct Assignment {
  std::vector<std::size_t> permutation;  // row i -> column permutation[i]
  double total_cost = 0.0;
};

/// Sum of the selected entries, added in ascending order so that the same
/// multiset of entries always produces the same bits.
[[nodiscard]] double assignment_cost(const CostMatrix& c, std::span<const std::size_t> permutation);

/// Exact minimum-cost perfect matching (shortest augmenting paths with
/// potentials, O(K^3)).
[[nodiscard]] Assignment solve_assignment(const CostMatrix& c);

/// Enumerates all K! permutations; ties resolve to the lexicographically
/// smallest permutation. Throws std::invalid_argument when K > 8.
[[nodiscard]] Assignment brute_force_assignment(const CostMatrix& c);

}  // namespace pdrb
