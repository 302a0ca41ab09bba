#include "pdrb/clustering.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "pdrb/metric.hpp"
#include "pdrb/parallel.hpp"
#include "pdrb/random.hpp"

namespace pdrb {

namespace {

void require_k(std::size_t n, std::size_t k) {
  if (k == 0 || k > n) throw std::invalid_argument("k must satisfy 1 <= k <= number of diagrams");
}

// costs[n * k + c] = W_q^q(X_n, centroid c)
std::vector<double> cost_table(std::span<const PersistenceDiagram> ensemble,
                               const std::vector<PersistenceDiagram>& centroids, double q) {
  const std::size_t n = ensemble.size(), k = centroids.size();
  std::vector<double> costs(n * k);
  parallel_for(n * k, [&](std::size_t idx) {
    costs[idx] = wasserstein_cost(ensemble[idx / k], centroids[idx % k], q);
  });
  return costs;
}

std::vector<std::size_t> nearest_labels(const std::vector<double>& costs, std::size_t n, std::size_t k) {
  std::vector<std::size_t> labels(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 1; c < k; ++c)
      if (costs[i * k + c] < costs[i * k + labels[i]]) labels[i] = c;
  return labels;
}

void repair_empty_clusters(std::span<const PersistenceDiagram> ensemble, std::vector<PersistenceDiagram>& centroids,
                           std::vector<std::size_t>& labels, std::vector<double>& costs, double q) {
  const std::size_t n = ensemble.size(), k = centroids.size();
  for (;;) {
    std::vector<std::size_t> sizes(k, 0);
    for (auto l : labels) ++sizes[l];
    const auto empty = std::find(sizes.begin(), sizes.end(), std::size_t{0});
    if (empty == sizes.end()) return;
    const auto c = static_cast<std::size_t>(empty - sizes.begin());

    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (sizes[labels[i]] < 2) continue;
      if (pick == n || costs[i * k + labels[i]] > costs[pick * k + labels[pick]]) pick = i;
    }
    if (pick == n) throw std::logic_error("no diagram available to re-seed an empty cluster");

    centroids[c] = ensemble[pick];
    labels[pick] = c;
    for (std::size_t i = 0; i < n; ++i) costs[i * k + c] = wasserstein_cost(ensemble[i], centroids[c], q);
  }
}

}  // namespace

std::vector<std::size_t> kmeans_pp_init(std::span<const PersistenceDiagram> ensemble, std::size_t k, double q,
                                        std::uint64_t seed) {
  require_valid_q(q);
  const std::size_t n = ensemble.size();
  require_k(n, k);
  Rng rng(seed);

  std::vector<std::size_t> chosen{static_cast<std::size_t>(rng.uniform_index(n))};
  std::vector<char> taken(n, 0);
  taken[chosen.front()] = 1;
  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());

  while (chosen.size() < k) {
    const auto& center = ensemble[chosen.back()];
    std::vector<double> d(n);
    parallel_for(n, [&](std::size_t i) { d[i] = wasserstein_distance(ensemble[i], center, q); });
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      nearest[i] = std::min(nearest[i], d[i] * d[i]);
      if (!taken[i]) total += nearest[i];
    }

    std::size_t pick = n;
    if (total > 0.0) {
      const double u = rng.uniform01() * total;
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (taken[i] || nearest[i] == 0.0) continue;
        acc += nearest[i];
        pick = i;
        if (u < acc) break;
      }
    } else {
      std::vector<std::size_t> free;
      for (std::size_t i = 0; i < n; ++i)
        if (!taken[i]) free.push_back(i);
      pick = free[rng.uniform_index(free.size())];
    }
    taken[pick] = 1;
    chosen.push_back(pick);
  }
  return chosen;
}

ClusteringResult kmeans(std::span<const PersistenceDiagram> ensemble, std::size_t k, double q,
                        const KMeansConfig& config, std::uint64_t seed) {
  const auto seeds = kmeans_pp_init(ensemble, k, q, seed);
  return kmeans(ensemble, std::span<const std::size_t>(seeds), q, config);
}

ClusteringResult kmeans(std::span<const PersistenceDiagram> ensemble, std::span<const std::size_t> seeds, double q,
                        const KMeansConfig& config) {
  const std::size_t n = ensemble.size(), k = seeds.size();
  require_k(n, k);
  require_valid_q(q);
  for (std::size_t a = 0; a < k; ++a) {
    if (seeds[a] >= n) throw std::invalid_argument("initial centroid index out of range");
    for (std::size_t b = 0; b < a; ++b)
      if (seeds[a] == seeds[b]) throw std::invalid_argument("initial centroid indices must be distinct");
  }

  ClusteringResult result;
  result.seeds.assign(seeds.begin(), seeds.end());
  std::vector<PersistenceDiagram> centroids;
  for (auto s : result.seeds) centroids.push_back(ensemble[s]);

  auto costs = cost_table(ensemble, centroids, q);
  auto labels = nearest_labels(costs, n, k);
  repair_empty_clusters(ensemble, centroids, labels, costs, q);
  auto energy = [&] {
    double e = 0.0;
    for (std::size_t i = 0; i < n; ++i) e += costs[i * k + labels[i]];
    return e;
  };
  result.energy_trace.push_back(energy());

  BarycenterConfig bary = config.barycenter;
  bary.q = q;
  bary.weights.clear();

  for (std::size_t it = 1; it <= config.max_iters; ++it) {
    result.iterations = it;
    std::vector<PersistenceDiagram> updated = centroids;
    parallel_for(k, [&](std::size_t c) {
      std::vector<PersistenceDiagram> members;
      std::vector<std::size_t> ids;
      for (std::size_t i = 0; i < n; ++i)
        if (labels[i] == c) {
          members.push_back(ensemble[i]);
          ids.push_back(i);
        }
      std::size_t closest = 0;
      double old_energy = 0.0;
      for (std::size_t j = 0; j < ids.size(); ++j) {
        old_energy += costs[ids[j] * k + c];
        if (costs[ids[j] * k + c] < costs[ids[closest] * k + c]) closest = j;
      }
      BarycenterConfig local = bary;
      local.init = BarycenterInit::at(closest);
      auto candidate = compute_barycenter(members, local).diagram;
      double new_energy = 0.0;
      for (const auto& x : members) new_energy += wasserstein_cost(x, candidate, q);
      if (new_energy < old_energy) updated[c] = std::move(candidate);
    });
    centroids = std::move(updated);

    costs = cost_table(ensemble, centroids, q);
    auto next = nearest_labels(costs, n, k);
    repair_empty_clusters(ensemble, centroids, next, costs, q);
    const bool stable = next == labels;
    labels = std::move(next);
    result.energy_trace.push_back(energy());
    if (stable) break;
  }

  result.labels = labels;
  result.centroids = centroids;
  result.total_energy = result.energy_trace.back();
  return result;
}

double adjusted_rand_index(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  if (a.size() != b.size()) throw std::invalid_argument("adjusted_rand_index: label lists differ in length");
  const std::size_t n = a.size();
  if (n < 2) return 1.0;

  std::map<std::pair<std::size_t, std::size_t>, double> table;
  std::map<std::size_t, double> rows, cols;
  for (std::size_t i = 0; i < n; ++i) {
    table[{a[i], b[i]}] += 1.0;
    rows[a[i]] += 1.0;
    cols[b[i]] += 1.0;
  }
  auto pairs = [](double c) { return c * (c - 1.0) / 2.0; };
  double index = 0.0, sum_rows = 0.0, sum_cols = 0.0;
  for (const auto& [key, c] : table) index += pairs(c);
  for (const auto& [key, c] : rows) sum_rows += pairs(c);
  for (const auto& [key, c] : cols) sum_cols += pairs(c);

  const double expected = sum_rows * sum_cols / pairs(static_cast<double>(n));
  const double max_index = 0.5 * (sum_rows + sum_cols);
  if (max_index == expected) return 1.0;
  return (index - expected) / (max_index - expected);
}

}  // namespace pdrb
