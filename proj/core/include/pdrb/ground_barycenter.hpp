#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "pdrb/diagram.hpp"

namespace pdrb {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point2, Point2) = default;
};

[[nodiscard]] inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
[[nodiscard]] inline Point2 to_point(DiagramPoint p) { return {p.birth, p.death}; }
[[nodiscard]] inline DiagramPoint to_diagram_point(Point2 p) { return {p.x, p.y}; }

/// Weighted sum of q-th power distances,
///   V_q(x) = sum_i w_i ||x - y_i||^q,
/// over at least one target. Weights are strictly positive and sum to 1
/// within 1e-12; the constructor throws std::invalid_argument otherwise.
class GroundProblem {
 public:
  GroundProblem(std::vector<Point2> targets, std::vector<double> weights, double q);

  [[nodiscard]] std::span<const Point2> targets() const noexcept { return targets_; }
  [[nodiscard]] std::span<const double> weights() const noexcept { return weights_; }
  [[nodiscard]] double q() const noexcept { return q_; }
  [[nodiscard]] std::size_t size() const noexcept { return targets_.size(); }

 private:
  std::vector<Point2> targets_;
  std::vector<double> weights_;
  double q_;
};

struct GroundOptions {
  double tol = 1e-9;  // stop once the accepted step is at most this long
  std::size_t max_iters = 10'000;
};

struct GroundSolution {
  Point2 point;
  double value = 0.0;   // V_q(point)
  bool unique = true;   // mirrors check_uniqueness()
  std::size_t iterations = 0;
  bool converged = true;  // false when max_iters ran out before tol was met
};

[[nodiscard]] double v_q(const GroundProblem& problem, Point2 x);

/// Gradient of V_q. Terms whose target coincides with x contribute zero.
[[nodiscard]] Point2 v_q_gradient(const GroundProblem& problem, Point2 x);

[[nodiscard]] Point2 weighted_mean(const GroundProblem& problem);

/// True when the minimiser of V_q is guaranteed unique: always for q > 1;
/// for q = 1 only when three of the targets are not collinear.
[[nodiscard]] bool check_uniqueness(const GroundProblem& problem);

/// Minimises V_q starting from the weighted mean.
///  - q = 2: the weighted mean, returned directly.
///  - q = 1: Weiszfeld iteration with the Vardi-Zhang correction at targets.
///  - otherwise: gradient descent with Armijo backtracking (halving). The
///    first trial step is the reweighted least-squares step 1/L with
///    L = q * max(1, q-1) * sum_i w_i ||x - y_i||^(q-2).
/// The returned value never exceeds V_q(weighted mean).
[[nodiscard]] GroundSolution ground_barycenter(const GroundProblem& problem, GroundOptions options = {});

/// Exhaustive argmin of V_q over a grid of spacing `resolution` covering the
/// targets' bounding box padded on every side by the targets' diameter.
/// Ties keep the first grid point in row-major (x outer, y inner) order.
[[nodiscard]] Point2 grid_search_oracle(const GroundProblem& problem, double resolution);

}  // namespace pdrb
