#include "pdrb/ground_barycenter.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "pdrb/parallel.hpp"

namespace pdrb {

GroundProblem::GroundProblem(std::vector<Point2> targets, std::vector<double> weights, double q)
    : targets_(std::move(targets)), weights_(std::move(weights)), q_(q) {
  if (targets_.empty()) throw std::invalid_argument("ground problem needs at least one target");
  if (targets_.size() != weights_.size())
    throw std::invalid_argument("ground problem needs one weight per target");
  if (!std::isfinite(q_) || q_ < 1.0) throw std::invalid_argument("q must be a finite real >= 1");
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w > 0.0)) throw std::invalid_argument("ground problem weights must be positive");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("ground problem weights must sum to 1");
  for (auto t : targets_)
    if (!std::isfinite(t.x) || !std::isfinite(t.y))
      throw std::invalid_argument("ground problem targets must be finite");
}

namespace {

double power(double r, double q) {
  if (q == 1.0) return r;
  if (q == 2.0) return r * r;
  return std::pow(r, q);
}

bool all_targets_equal(const GroundProblem& p) {
  const auto t = p.targets();
  return std::all_of(t.begin(), t.end(), [&](Point2 y) { return y == t.front(); });
}

GroundSolution finish(const GroundProblem& p, Point2 x, std::size_t iterations, bool converged) {
  return {x, v_q(p, x), check_uniqueness(p), iterations, converged};
}

// Weiszfeld with the Vardi-Zhang step when the iterate sits on a target.
GroundSolution solve_q1(const GroundProblem& p, Point2 x, GroundOptions options) {
  const auto targets = p.targets();
  const auto weights = p.weights();
  Point2 best = x;
  double best_value = v_q(p, x);

  for (std::size_t it = 1; it <= options.max_iters; ++it) {
    double coincident = 0.0;
    double denom = 0.0;
    Point2 numer{}, pull{};
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const Point2 d = targets[i] - x;
      const double r = norm(d);
      if (r == 0.0) {
        coincident += weights[i];
        continue;
      }
      const double w = weights[i] / r;
      denom += w;
      numer = numer + w * targets[i];
      pull = pull + w * d;
    }
    if (denom == 0.0) return finish(p, x, it, true);  // every target coincides with x

    const Point2 t = (1.0 / denom) * numer;
    Point2 next = t;
    if (coincident > 0.0) {
      const double r = norm(pull);
      if (r <= coincident) return finish(p, x, it, true);  // x is the median
      const double beta = std::min(1.0, coincident / r);
      next = (1.0 - beta) * t + beta * x;
    }
    const double step = norm(next - x);
    x = next;
    const double value = v_q(p, x);
    if (value < best_value) {
      best_value = value;
      best = x;
    }
    if (step <= options.tol) return finish(p, best, it, true);
  }
  return finish(p, best, options.max_iters, false);
}

GroundSolution solve_descent(const GroundProblem& p, Point2 x, GroundOptions options) {
  constexpr double armijo = 1e-4;
  const double q = p.q();
  const auto targets = p.targets();
  const auto weights = p.weights();
  double fx = v_q(p, x);

  for (std::size_t it = 1; it <= options.max_iters; ++it) {
    Point2 g{};
    double curvature = 0.0;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const Point2 d = x - targets[i];
      const double r = norm(d);
      if (r == 0.0) continue;
      const double s = weights[i] * q * std::pow(r, q - 2.0);
      g = g + s * d;
      curvature += s * std::max(1.0, q - 1.0);
    }
    const double gnorm = norm(g);
    if (gnorm == 0.0 || curvature == 0.0) return finish(p, x, it, true);

    double alpha = 1.0 / curvature;
    bool accepted = false;
    Point2 next{};
    double fnext = fx;
    while (alpha * gnorm > 1e-3 * options.tol) {
      next = x - alpha * g;
      fnext = v_q(p, next);
      if (fnext <= fx - armijo * alpha * gnorm * gnorm) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) return finish(p, x, it, true);  // no representable descent left

    const double step = alpha * gnorm;
    x = next;
    fx = fnext;
    if (step <= options.tol) return finish(p, x, it, true);
  }
  return finish(p, x, options.max_iters, false);
}

}  // namespace

double v_q(const GroundProblem& problem, Point2 x) {
  const auto targets = problem.targets();
  const auto weights = problem.weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < targets.size(); ++i)
    sum += weights[i] * power(norm(x - targets[i]), problem.q());
  return sum;
}

Point2 v_q_gradient(const GroundProblem& problem, Point2 x) {
  const auto targets = problem.targets();
  const auto weights = problem.weights();
  const double q = problem.q();
  Point2 g{};
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const Point2 d = x - targets[i];
    const double r = norm(d);
    if (r == 0.0) continue;
    g = g + (weights[i] * q * std::pow(r, q - 2.0)) * d;
  }
  return g;
}

Point2 weighted_mean(const GroundProblem& problem) {
  const auto targets = problem.targets();
  const auto weights = problem.weights();
  Point2 m{};
  for (std::size_t i = 0; i < targets.size(); ++i) m = m + weights[i] * targets[i];
  return m;
}

bool check_uniqueness(const GroundProblem& problem) {
  if (problem.q() > 1.0) return true;
  const auto t = problem.targets();
  if (t.size() < 3) return false;
  // Anchor on the farthest point from t[0]; any point off that line breaks collinearity.
  std::size_t far = 0;
  double far_dist = 0.0;
  for (std::size_t i = 1; i < t.size(); ++i)
    if (const double d = norm(t[i] - t[0]); d > far_dist) {
      far_dist = d;
      far = i;
    }
  if (far_dist == 0.0) return false;
  const Point2 axis = t[far] - t[0];
  for (const auto& c : t) {
    const Point2 v = c - t[0];
    const double cross = axis.x * v.y - axis.y * v.x;
    if (std::abs(cross) > 1e-12 * far_dist * norm(v)) return true;
  }
  return false;
}

GroundSolution ground_barycenter(const GroundProblem& problem, GroundOptions options) {
  if (!(options.tol > 0.0)) throw std::invalid_argument("ground_barycenter: tol must be > 0");
  if (all_targets_equal(problem)) return finish(problem, problem.targets().front(), 0, true);

  const Point2 start = weighted_mean(problem);
  if (problem.q() == 2.0) return finish(problem, start, 0, true);
  if (problem.q() == 1.0) return solve_q1(problem, start, options);
  return solve_descent(problem, start, options);
}

Point2 grid_search_oracle(const GroundProblem& problem, double resolution) {
  if (!(resolution > 0.0)) throw std::invalid_argument("grid_search_oracle: resolution must be > 0");
  const auto t = problem.targets();
  double diameter = 0.0;
  Point2 lo = t.front(), hi = t.front();
  for (std::size_t i = 0; i < t.size(); ++i) {
    lo = {std::min(lo.x, t[i].x), std::min(lo.y, t[i].y)};
    hi = {std::max(hi.x, t[i].x), std::max(hi.y, t[i].y)};
    for (std::size_t j = i + 1; j < t.size(); ++j) diameter = std::max(diameter, norm(t[i] - t[j]));
  }
  lo = lo - Point2{diameter, diameter};
  hi = hi + Point2{diameter, diameter};
  const auto nx = static_cast<std::size_t>(std::ceil((hi.x - lo.x) / resolution)) + 1;
  const auto ny = static_cast<std::size_t>(std::ceil((hi.y - lo.y) / resolution)) + 1;

  struct Best {
    double value = std::numeric_limits<double>::infinity();
    Point2 at;
  };
  std::vector<Best> column_best(nx);
  parallel_for(nx, [&](std::size_t i) {
    Best best;
    const double x = lo.x + static_cast<double>(i) * resolution;
    for (std::size_t j = 0; j < ny; ++j) {
      const Point2 p{x, lo.y + static_cast<double>(j) * resolution};
      const double v = v_q(problem, p);
      if (v < best.value) best = {v, p};
    }
    column_best[i] = best;
  });

  Best best;
  for (const auto& b : column_best)
    if (b.value < best.value) best = b;
  return best.at;
}

}  // namespace pdrb
