#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pdrb/barycenter.hpp"
#include "pdrb/clustering.hpp"
#include "pdrb/diagram.hpp"
#include "pdrb/ground_barycenter.hpp"

namespace pdrb {

struct Dictionary {
  std::vector<PersistenceDiagram> atoms;
};

/// Barycentric coordinates over the atoms of a dictionary.
using CoefficientVector = std::vector<double>;

/// Throws std::invalid_argument unless there are at least two atoms and none
/// is empty.
void validate_dictionary(const Dictionary& dictionary);

/// Throws std::invalid_argument unless lam has m non-negative entries summing
/// to 1 within 1e-9.
void validate_coefficients(std::span<const double> lam, std::size_t m);

/// Barycenter of the atoms under weights lam (renormalised to sum exactly to
/// 1). The iteration starts from the atom with the largest weight, so a
/// one-hot vector returns that atom unchanged. `config.weights` and
/// `config.init` are overridden.
[[nodiscard]] PersistenceDiagram reconstruct(const Dictionary& dictionary, std::span<const double> lam, double q,
                                             const BarycenterConfig& config = {});

/// sum_l W_q^q(reconstruct(D, lambda_l), X_l)
[[nodiscard]] double encoding_energy(const Dictionary& dictionary, std::span<const CoefficientVector> coefficients,
                                     std::span<const PersistenceDiagram> ensemble, double q,
                                     const BarycenterConfig& config = {});

/// Gradient of the frozen-plan surrogate at a given dictionary/coefficients.
///
/// The surrogate keeps every transport plan of the evaluation point fixed:
/// each reconstructed point b is re-solved as the ground barycenter of the
/// atom points it is matched to (diagonal matches are constants), and the
/// energy is the fixed-plan transport cost from those points to each input.
/// Coefficients enter through softmax logits theta with lambda = softmax(theta).
/// Requires q > 1.
struct EncodingGradient {
  double energy = 0.0;                      // surrogate energy at the evaluation point
  std::vector<std::vector<Point2>> atoms;   // d/d(birth, death) per atom point
  std::vector<std::vector<double>> logits;  // d/d theta_l per input
};

[[nodiscard]] EncodingGradient frozen_plan_gradient(const Dictionary& dictionary,
                                                    std::span<const CoefficientVector> coefficients,
                                                    std::span<const PersistenceDiagram> ensemble, double q,
                                                    const BarycenterConfig& config = {});

/// Central differences of the same frozen-plan surrogate with step h, taken
/// at theta = log(lambda). Logits of zero coefficients are left at 0.
[[nodiscard]] EncodingGradient finite_difference_gradient(const Dictionary& dictionary,
                                                          std::span<const CoefficientVector> coefficients,
                                                          std::span<const PersistenceDiagram> ensemble,
                                                          double q, double h, const BarycenterConfig& config = {});

/// max |fd - analytic| / max |analytic| over every atom coordinate and logit
/// (returns max |fd| when the analytic gradient vanishes).
[[nodiscard]] double fd_gradient_check(const Dictionary& dictionary, std::span<const CoefficientVector> coefficients,
                                       std::span<const PersistenceDiagram> ensemble, double q, double h,
                                       const BarycenterConfig& config = {});

struct EncodeConfig {
  std::size_t max_epochs = 200;
  double atom_rate = 1e-2;
  double logit_rate = 1e-2;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double adam_epsilon = 1e-8;
  double relative_tolerance = 1e-6;
  /// Initial logits are -W_q(X_l, a_j) / (temperature * mean distance).
  double temperature = 0.2;
  /// Rate multipliers after an accepted / rejected step.
  double grow = 1.2;
  double shrink = 0.5;
  double min_rate_scale = 1e-6;
  BarycenterConfig barycenter;  // reconstructions; q, weights and init are overridden
  KMeansConfig kmeans;          // initial atoms
};

struct EncodingResult {
  Dictionary dictionary;
  std::vector<CoefficientVector> coefficients;
  std::vector<double> energy_trace;  // initial energy, then one entry per epoch
  std::size_t epochs = 0;
  std::size_t rejected_steps = 0;
  bool converged = false;  // stopped on the relative tolerance
};

/// Learns m atoms and one coefficient vector per input. Atoms start at the
/// k-means centroids (k = m, same seed). Each epoch takes an Adam step on the
/// atom coordinates and logits along the frozen-plan gradient and keeps it
/// only if the exact encoding energy does not increase; rates grow after an
/// accepted step and shrink after a rejected one. Atom points pushed below
/// the diagonal are moved onto it. Throws std::invalid_argument for an empty
/// ensemble, m < 2, m > N or q <= 1.
[[nodiscard]] EncodingResult encode(std::span<const PersistenceDiagram> ensemble, std::size_t m, double q,
                                    const EncodeConfig& config, std::uint64_t seed);

struct PlanarLayout {
  std::array<Point2, 3> vertices;  // atom positions
  std::vector<Point2> points;      // sum_j lambda_j * vertices[j] per input
  bool clamped = false;            // distances violated the triangle inequality
};

/// Places atom 1 at the origin, atom 2 at (d12, 0) and atom 3 above the x
/// axis by the law of cosines. A negative radicand is clamped to 0 and
/// reported. Throws std::domain_error when d12 = 0.
[[nodiscard]] PlanarLayout planar_layout_from_distances(double d12, double d13, double d23,
                                                        std::span<const CoefficientVector> coefficients);

/// Layout from the atoms' pairwise W_q distances. Requires exactly 3 atoms.
[[nodiscard]] PlanarLayout planar_layout(const Dictionary& dictionary, std::span<const CoefficientVector> coefficients,
                                         double q);

/// Minimum distance between points of different classes divided by the
/// maximum distance between points of the same class (infinity when every
/// class collapses to a point).
[[nodiscard]] double separation_score(std::span<const Point2> points, std::span<const std::size_t> labels);

}  // namespace pdrb
