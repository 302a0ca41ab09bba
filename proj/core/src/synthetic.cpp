#include "pdrb/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pdrb/random.hpp"

namespace pdrb {

EnsembleSpec default_outlier_spec() {
  EnsembleSpec spec;
  spec.clusters = {{4, 2, 0.29, 0.31}, {4, 3, 0.54, 0.56}, {4, 4, 0.79, 0.81}};
  spec.outliers = {{0, 0}, {1, 0}};
  return spec;
}

namespace {

constexpr std::size_t kLattice = 3;

struct Bump {
  double row, col, sigma, amplitude;
};

}  // namespace

SyntheticEnsemble make_outlier_ensemble(const EnsembleSpec& spec, std::uint64_t seed) {
  if (spec.dims.size() != 2 || spec.dims[0] < kLattice || spec.dims[1] < kLattice)
    throw std::invalid_argument("synthetic ensembles need a 2D grid of at least 3x3");
  if (!(spec.margin > 0.0)) throw std::invalid_argument("outlier margin must be positive");
  if (!(spec.sigma_min > 0.0) || spec.sigma_max < spec.sigma_min)
    throw std::invalid_argument("invalid bump width range");
  for (const auto& c : spec.clusters) {
    if (c.bumps == 0 || c.bumps >= kLattice * kLattice)
      throw std::invalid_argument("bumps per member must be between 1 and 8");
    if (c.amplitude_max < c.amplitude_min || !(c.amplitude_min > 0.0))
      throw std::invalid_argument("invalid amplitude range");
  }
  for (const auto& o : spec.outliers)
    if (o.cluster >= spec.clusters.size() || o.member >= spec.clusters[o.cluster].count)
      throw std::invalid_argument("outlier refers to a missing ensemble member");

  const std::size_t rows = spec.dims[0], cols = spec.dims[1];
  const double cell_h = static_cast<double>(rows) / kLattice;
  const double cell_w = static_cast<double>(cols) / kLattice;

  Rng rng(seed);
  SyntheticEnsemble out;
  for (std::size_t c = 0; c < spec.clusters.size(); ++c) {
    const auto& cluster = spec.clusters[c];
    for (std::size_t member = 0; member < cluster.count; ++member) {
      // Partial Fisher-Yates: the first `bumps` cells hold Gaussians, the next one the outlier.
      std::vector<std::size_t> cells(kLattice * kLattice);
      std::iota(cells.begin(), cells.end(), std::size_t{0});
      for (std::size_t i = 0; i <= cluster.bumps; ++i)
        std::swap(cells[i], cells[i + rng.uniform_index(cells.size() - i)]);

      std::vector<Bump> bumps;
      for (std::size_t b = 0; b < cluster.bumps; ++b) {
        const double r0 = (static_cast<double>(cells[b] / kLattice) + 0.5) * cell_h;
        const double c0 = (static_cast<double>(cells[b] % kLattice) + 0.5) * cell_w;
        Bump bump{};
        bump.row = r0 + rng.uniform(-spec.jitter, spec.jitter) * cell_h;
        bump.col = c0 + rng.uniform(-spec.jitter, spec.jitter) * cell_w;
        bump.sigma = rng.uniform(spec.sigma_min, spec.sigma_max);
        bump.amplitude = rng.uniform(cluster.amplitude_min, cluster.amplitude_max);
        bumps.push_back(bump);
      }

      std::vector<double> values(rows * cols, 0.0);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
          double v = 0.0;
          for (const auto& b : bumps) {
            const double dr = static_cast<double>(i) - b.row, dc = static_cast<double>(j) - b.col;
            v += b.amplitude * std::exp(-(dr * dr + dc * dc) / (2.0 * b.sigma * b.sigma));
          }
          values[i * cols + j] = v;
        }

      const bool injected = std::any_of(spec.outliers.begin(), spec.outliers.end(), [&](const OutlierSpec& o) {
        return o.cluster == c && o.member == member;
      });
      if (injected) {
        const auto spike_cell = cells[cluster.bumps];
        const auto i = static_cast<std::size_t>((static_cast<double>(spike_cell / kLattice) + 0.5) * cell_h);
        const auto j = static_cast<std::size_t>((static_cast<double>(spike_cell % kLattice) + 0.5) * cell_w);
        values[i * cols + j] = *std::max_element(values.begin(), values.end()) + spec.margin;
      }

      out.grids.emplace_back(spec.dims, std::move(values));
      out.labels.push_back(c);
      out.outlier.push_back(injected);
    }
  }
  return out;
}

}  // namespace pdrb
