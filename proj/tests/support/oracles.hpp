#pragma once

// Independent reference implementations shared by the unit and acceptance tests.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "pdrb/diagram.hpp"
#include "pdrb/persistence.hpp"
#include "pdrb/random.hpp"

namespace pdrb::testing {

inline PersistenceDiagram random_diagram(Rng& rng, std::size_t max_points, double scale = 1.0) {
  const auto n = static_cast<std::size_t>(rng.uniform_index(max_points + 1));
  std::vector<DiagramPoint> pts;
  for (std::size_t i = 0; i < n; ++i) {
    const double b = rng.uniform(0.0, scale);
    pts.push_back({b, b + rng.uniform(0.05 * scale, scale)});
  }
  return PersistenceDiagram(std::move(pts));
}

inline std::vector<std::pair<double, double>> sorted_pairs(const PersistenceDiagram& d) {
  std::vector<std::pair<double, double>> out;
  for (const auto& p : d.points()) out.emplace_back(p.birth, p.death);
  std::sort(out.begin(), out.end());
  return out;
}

/// Superlevel-set pairs by recomputing connected components from scratch after
/// every vertex is added in sweep order (value descending, ties by lower index).
/// Neighbourhoods are derived from coordinates here, not from grid_neighbors().
inline std::vector<std::pair<double, double>> brute_force_max_pairs(const ScalarGrid& grid, bool full) {
  std::vector<std::size_t> dims = grid.dims();
  while (dims.size() < 3) dims.insert(dims.begin(), 1);
  const std::size_t n = grid.size();
  const auto& v = grid.values();

  auto coords = [&](std::size_t i) {
    return std::array<long, 3>{static_cast<long>(i / (dims[1] * dims[2])), static_cast<long>((i / dims[2]) % dims[1]),
                               static_cast<long>(i % dims[2])};
  };
  auto adjacent = [&](std::size_t a, std::size_t b) {
    const auto ca = coords(a), cb = coords(b);
    long manhattan = 0, chebyshev = 0;
    for (int k = 0; k < 3; ++k) {
      const long d = std::abs(ca[k] - cb[k]);
      manhattan += d;
      chebyshev = std::max(chebyshev, d);
    }
    return full ? chebyshev == 1 : manhattan == 1;
  };

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return v[a] > v[b] || (v[a] == v[b] && a < b);
  });
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;

  // Component label = rank of its highest vertex.
  auto components = [&](std::size_t upto) {
    std::vector<long> label(n, -1);
    for (std::size_t r = 0; r <= upto; ++r) {
      const std::size_t s = order[r];
      if (label[s] >= 0) continue;
      std::vector<std::size_t> stack{s};
      label[s] = static_cast<long>(r);
      while (!stack.empty()) {
        const auto a = stack.back();
        stack.pop_back();
        for (std::size_t b = 0; b < n; ++b)
          if (label[b] < 0 && rank[b] <= upto && adjacent(a, b)) {
            label[b] = static_cast<long>(r);
            stack.push_back(b);
          }
      }
    }
    return label;
  };

  std::vector<std::pair<double, double>> pairs;
  std::vector<long> previous(n, -1);
  for (std::size_t r = 0; r < n; ++r) {
    const auto current = components(r);
    const long merged = current[order[r]];
    std::vector<long> absorbed;
    for (std::size_t i = 0; i < n; ++i)
      if (previous[i] >= 0 && current[i] == merged) absorbed.push_back(previous[i]);
    std::sort(absorbed.begin(), absorbed.end());
    absorbed.erase(std::unique(absorbed.begin(), absorbed.end()), absorbed.end());
    for (std::size_t k = 1; k < absorbed.size(); ++k)
      pairs.emplace_back(v[order[r]], v[order[static_cast<std::size_t>(absorbed[k])]]);
    previous = current;
  }
  pairs.emplace_back(v[order.back()], v[order.front()]);
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace pdrb::testing
