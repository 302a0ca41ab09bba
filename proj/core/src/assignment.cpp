#include "pdrb/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace pdrb {

CostMatrix::CostMatrix(std::size_t size, std::vector<double> entries)
    : size_(size), entries_(std::move(entries)) {
  if (entries_.size() != size_ * size_)
    throw std::invalid_argument("cost matrix entry count must be size^2");
  for (double e : entries_)
    if (!std::isfinite(e) || e < 0.0)
      throw std::invalid_argument("cost matrix entries must be finite and non-negative");
}

namespace {

double powered_distance(DiagramPoint a, DiagramPoint b, double q) {
  const double db = a.birth - b.birth, dd = a.death - b.death;
  if (q == 2.0) return db * db + dd * dd;
  const double d = std::hypot(db, dd);
  return q == 1.0 ? d : std::pow(d, q);
}

}  // namespace

double transport_cost(const AugmentedPoint& x, const AugmentedPoint& y, double q, DiagonalCost mode) {
  if (x.on_diagonal() && y.on_diagonal()) return 0.0;
  if (mode == DiagonalCost::Perpendicular) {
    if (y.on_diagonal()) return powered_distance(x.point, project_to_diagonal(x.point), q);
    if (x.on_diagonal()) return powered_distance(y.point, project_to_diagonal(y.point), q);
  }
  return powered_distance(x.point, y.point, q);
}

CostMatrix build_cost_matrix(const AugmentedPair& pair, double q, DiagonalCost mode) {
  if (!std::isfinite(q) || q < 1.0) throw std::invalid_argument("q must be a finite real >= 1");
  const std::size_t k = pair.size();
  std::vector<double> entries(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      entries[i * k + j] = transport_cost(pair.left[i], pair.right[j], q, mode);
  return CostMatrix(k, std::move(entries));
}

double assignment_cost(const CostMatrix& c, std::span<const std::size_t> permutation) {
  std::vector<double> picked;
  picked.reserve(permutation.size());
  for (std::size_t i = 0; i < permutation.size(); ++i) picked.push_back(c(i, permutation[i]));
  std::sort(picked.begin(), picked.end());
  double total = 0.0;
  for (double v : picked) total += v;
  return total;
}

Assignment solve_assignment(const CostMatrix& c) {
  const std::size_t n = c.size();
  Assignment result;
  if (n == 0) return result;

  // 1-based potentials; column 0 is the virtual source of each augmentation.
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), min_slack(n + 1);
  std::vector<std::size_t> row_of(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);

  for (std::size_t i = 1; i <= n; ++i) {
    row_of[0] = i;
    std::size_t j0 = 0;
    std::fill(min_slack.begin(), min_slack.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = row_of[j0];
      double delta = inf;
      std::size_t j1 = 0;
      const auto row = c.row(i0 - 1);
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double slack = row[j - 1] - u[i0] - v[j];
        if (slack < min_slack[j]) {
          min_slack[j] = slack;
          way[j] = j0;
        }
        if (min_slack[j] < delta) {
          delta = min_slack[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[row_of[j]] += delta;
          v[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      row_of[j0] = row_of[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  result.permutation.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j) result.permutation[row_of[j] - 1] = j - 1;
  result.total_cost = assignment_cost(c, result.permutation);
  return result;
}

Assignment brute_force_assignment(const CostMatrix& c) {
  const std::size_t n = c.size();
  if (n > 8) throw std::invalid_argument("brute_force_assignment supports K <= 8");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Assignment best{perm, assignment_cost(c, perm)};
  while (std::next_permutation(perm.begin(), perm.end())) {
    const double cost = assignment_cost(c, perm);
    if (cost < best.total_cost) best = {perm, cost};
  }
  return best;
}

}  // namespace pdrb
