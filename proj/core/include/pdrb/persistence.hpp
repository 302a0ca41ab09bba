#pragma once

#include <cstddef>
#include <vector>

#include "pdrb/diagram.hpp"

namespace pdrb {

/// Scalar field sampled on a regular 1D, 2D or 3D grid, row-major
/// (the last dimension varies fastest).
class ScalarGrid {
 public:
  ScalarGrid(std::vector<std::size_t> dims, std::vector<double> values);

  [[nodiscard]] const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

 private:
  std::vector<std::size_t> dims_;
  std::vector<double> values_;
};

/// Full: every cell sharing a vertex (8 in 2D, 26 in 3D). Axis: face
/// neighbours only (4 in 2D, 6 in 3D). Both coincide in 1D.
enum class Connectivity { Full, Axis };

/// Linear indices of the neighbours of `index` under `connectivity`, in
/// increasing order.
[[nodiscard]] std::vector<std::size_t> grid_neighbors(const std::vector<std::size_t>& dims,
                                                      std::size_t index,
                                                      Connectivity connectivity);

/// Strict total order used by the sweep: higher value first, equal values
/// broken by lower linear index first.
[[nodiscard]] inline bool sweeps_before(double va, std::size_t ia, double vb, std::size_t ib) {
  return va > vb || (va == vb && ia < ib);
}

/// Maximum/saddle persistence pairs of the superlevel-set filtration. Each pair
/// is stored as (merge value, maximum value). The surviving global maximum is
/// paired with the global minimum. One pair per local maximum.
[[nodiscard]] PersistenceDiagram extract_max_pairs(const ScalarGrid& grid,
                                                   Connectivity connectivity);

/// Keeps the k most persistent points (ties: smaller birth first, then input
/// order), returned in their original relative order.
[[nodiscard]] PersistenceDiagram threshold_top_k(const PersistenceDiagram& x, std::size_t k);

}  // namespace pdrb
