#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pdrb/persistence.hpp"

namespace pdrb {

/// One ground-truth class of Gaussian-mixture fields.
struct ClusterSpec {
  std::size_t count = 4;  // members
  std::size_t bumps = 2;  // Gaussians per member
  double amplitude_min = 0.8;
  double amplitude_max = 1.0;
};

/// Member `member` of cluster `cluster` gets one isolated pixel raised to
/// (field maximum + margin).
struct OutlierSpec {
  std::size_t cluster = 0;
  std::size_t member = 0;
};

/// Recipe for a seeded 2D outlier-clustering ensemble. Bumps are centred on
/// distinct cells of a 3x3 lattice over the grid (with jitter), so at most 8
/// bumps per member; the outlier pixel goes to the centre of an unused cell.
struct EnsembleSpec {
  std::vector<std::size_t> dims{32, 32};
  std::vector<ClusterSpec> clusters;
  std::vector<OutlierSpec> outliers;
  double margin = 0.25;
  double sigma_min = 1.3;  // bump standard deviation, in pixels
  double sigma_max = 1.7;
  double jitter = 0.12;    // centre offset as a fraction of the cell size
};

/// Three classes of 2, 3 and 4 bumps with four members each and one outlier
/// in each of the first two classes. Amplitudes grow with the bump count
/// (about 0.30, 0.55, 0.80) so that a spike of height max + margin resembles
/// the tallest features of the next class.
[[nodiscard]] EnsembleSpec default_outlier_spec();

/// Seed for which the default ensemble shows the q = 2 outlier misassignment
/// (k-means seeded with the same value, diagrams pruned at 1e-3).
inline constexpr std::uint64_t kDefaultOutlierSeed = 2;

struct SyntheticEnsemble {
  std::vector<ScalarGrid> grids;
  std::vector<std::size_t> labels;  // ground-truth class per grid
  std::vector<bool> outlier;        // whether the grid received an outlier pixel
};

/// Deterministic under `seed`. Random draws do not depend on the outlier
/// list, so the same seed without outliers yields the uninjected twins.
[[nodiscard]] SyntheticEnsemble make_outlier_ensemble(const EnsembleSpec& spec, std::uint64_t seed);

}  // namespace pdrb
