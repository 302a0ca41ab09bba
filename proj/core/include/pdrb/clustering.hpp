#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pdrb/barycenter.hpp"
#include "pdrb/diagram.hpp"

namespace pdrb {

struct KMeansConfig {
  std::size_t max_iters = 50;
  /// Settings for the per-cluster barycenters. q, weights and init are
  /// overridden by kmeans().
  BarycenterConfig barycenter;
};

struct ClusteringResult {
  std::vector<std::size_t> labels;
  std::vector<PersistenceDiagram> centroids;
  std::size_t iterations = 0;
  double total_energy = 0.0;          // sum_n W_q^q(X_n, centroid[label_n])
  std::vector<double> energy_trace;   // total energy after every labeling step
  std::vector<std::size_t> seeds;     // k-means++ picks
};

/// k-means++ seeding under W_q: the first index is uniform, each following
/// index is drawn with probability proportional to the squared distance to
/// the nearest chosen center. When every remaining distance is zero the draw
/// falls back to uniform among the unchosen indices.
[[nodiscard]] std::vector<std::size_t> kmeans_pp_init(std::span<const PersistenceDiagram> ensemble,
                                                      std::size_t k, double q, std::uint64_t seed);

/// Lloyd iterations on the W_q metric space. Labels go to the nearest
/// centroid (ties: lowest cluster index); centroids are W_q barycenters of
/// their clusters with uniform weights, started from the member nearest to
/// the previous centroid and kept only when they lower the cluster energy.
/// An empty cluster takes the diagram farthest from its own centroid among
/// clusters of two or more members.
[[nodiscard]] ClusteringResult kmeans(std::span<const PersistenceDiagram> ensemble, std::size_t k, double q,
                                      const KMeansConfig& config, std::uint64_t seed);

/// Same iterations from explicit initial centroids (distinct ensemble indices).
[[nodiscard]] ClusteringResult kmeans(std::span<const PersistenceDiagram> ensemble,
                                      std::span<const std::size_t> seeds, double q, const KMeansConfig& config);

/// Adjusted Rand index between two labelings of the same items. Returns 1
/// for identical partitions (including the degenerate all-singleton and
/// single-cluster cases). Throws std::invalid_argument on a length mismatch.
[[nodiscard]] double adjusted_rand_index(std::span<const std::size_t> a, std::span<const std::size_t> b);

}  // namespace pdrb
