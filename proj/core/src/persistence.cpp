#include "pdrb/persistence.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pdrb {

ScalarGrid::ScalarGrid(std::vector<std::size_t> dims, std::vector<double> values)
    : dims_(std::move(dims)), values_(std::move(values)) {
  if (dims_.empty() || dims_.size() > 3)
    throw std::invalid_argument("grid must have 1, 2 or 3 dimensions");
  std::size_t count = 1;
  for (auto d : dims_) {
    if (d == 0) throw std::invalid_argument("grid dimensions must be positive");
    count *= d;
  }
  if (count != values_.size())
    throw std::invalid_argument("grid value count does not match the product of dims");
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (!std::isfinite(values_[i]))
      throw std::invalid_argument("grid value at index " + std::to_string(i) + " is not finite");
}

std::vector<std::size_t> grid_neighbors(const std::vector<std::size_t>& dims, std::size_t index,
                                        Connectivity connectivity) {
  // Pad to 3D so one loop covers every rank.
  std::array<std::size_t, 3> extent{1, 1, 1};
  std::copy(dims.begin(), dims.end(), extent.begin() + (3 - dims.size()));
  const std::array<std::size_t, 3> coord{index / (extent[1] * extent[2]),
                                         (index / extent[2]) % extent[1], index % extent[2]};

  std::vector<std::size_t> out;
  for (int dz = -1; dz <= 1; ++dz)
    for (int dy = -1; dy <= 1; ++dy)
      for (int dx = -1; dx <= 1; ++dx) {
        const int offaxis = (dz != 0) + (dy != 0) + (dx != 0);
        if (offaxis == 0) continue;
        if (connectivity == Connectivity::Axis && offaxis != 1) continue;
        const std::array<int, 3> delta{dz, dy, dx};
        std::size_t linear = 0;
        bool inside = true;
        for (int a = 0; a < 3; ++a) {
          const auto c = static_cast<long long>(coord[a]) + delta[a];
          if (c < 0 || c >= static_cast<long long>(extent[a])) {
            inside = false;
            break;
          }
          linear = linear * extent[a] + static_cast<std::size_t>(c);
        }
        if (inside) out.push_back(linear);
      }
  return out;
}

namespace {

struct Components {
  explicit Components(std::size_t n) : parent(n), peak(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::iota(peak.begin(), peak.end(), std::size_t{0});
  }

  std::size_t find(std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  }

  std::vector<std::size_t> parent;
  std::vector<std::size_t> peak;  // vertex holding the component maximum, valid at roots
};

}  // namespace

PersistenceDiagram extract_max_pairs(const ScalarGrid& grid, Connectivity connectivity) {
  const auto& f = grid.values();
  const std::size_t n = f.size();
  if (n == 0) throw std::invalid_argument("extract_max_pairs: empty grid");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return sweeps_before(f[a], a, f[b], b); });

  auto older = [&](std::size_t a, std::size_t b) { return sweeps_before(f[a], a, f[b], b); };

  Components uf(n);
  std::vector<char> visited(n, 0);
  std::vector<DiagramPoint> pairs;
  std::vector<std::size_t> roots;

  for (std::size_t v : order) {
    visited[v] = 1;
    roots.clear();
    for (std::size_t w : grid_neighbors(grid.dims(), v, connectivity)) {
      if (!visited[w]) continue;
      const std::size_t r = uf.find(w);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    if (roots.empty()) continue;  // v is a local maximum and starts its own component

    // Elder rule: the component with the oldest (highest) maximum survives.
    std::size_t survivor = roots.front();
    for (std::size_t r : roots)
      if (older(uf.peak[r], uf.peak[survivor])) survivor = r;
    for (std::size_t r : roots) {
      if (r == survivor) continue;
      pairs.push_back({f[v], f[uf.peak[r]]});
      uf.parent[r] = survivor;
    }
    uf.parent[v] = survivor;
  }

  const std::size_t global_max = order.front();
  const std::size_t global_min = order.back();
  pairs.push_back({f[global_min], f[global_max]});
  return PersistenceDiagram(std::move(pairs));
}

PersistenceDiagram threshold_top_k(const PersistenceDiagram& x, std::size_t k) {
  if (k == 0) throw std::invalid_argument("threshold_top_k: k must be >= 1");
  if (k >= x.size()) return x;

  std::vector<std::size_t> rank(x.size());
  std::iota(rank.begin(), rank.end(), std::size_t{0});
  std::stable_sort(rank.begin(), rank.end(), [&](std::size_t a, std::size_t b) {
    const double pa = x[a].persistence(), pb = x[b].persistence();
    if (pa != pb) return pa > pb;
    return x[a].birth < x[b].birth;
  });
  rank.resize(k);
  std::sort(rank.begin(), rank.end());

  std::vector<DiagramPoint> kept;
  kept.reserve(k);
  for (auto i : rank) kept.push_back(x[i]);
  return PersistenceDiagram(std::move(kept), x.label());
}

}  // namespace pdrb
