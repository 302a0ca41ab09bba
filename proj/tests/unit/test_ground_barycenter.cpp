#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "pdrb/ground_barycenter.hpp"
#include "pdrb/random.hpp"

using namespace pdrb;

namespace {

GroundProblem random_problem(Rng& rng, double q, double scale) {
  const auto m = 1 + rng.uniform_index(5);
  std::vector<Point2> y(m);
  std::vector<double> w(m);
  double total = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    y[i] = {rng.uniform(0, scale), rng.uniform(0, scale)};
    w[i] = rng.uniform(0.1, 1.0);
    total += w[i];
  }
  for (auto& x : w) x /= total;
  return GroundProblem(y, w, q);
}

}  // namespace

TEST_SUITE("ground_barycenter") {
  TEST_CASE("objective examples") {
    const GroundProblem p({{0, 0}, {2, 0}}, {0.5, 0.5}, 2.0);
    CHECK(v_q(p, {1, 0}) == doctest::Approx(1.0));
    CHECK(v_q(p, {0, 0}) == doctest::Approx(2.0));
    const auto g = v_q_gradient(p, {0, 0});
    CHECK(g.x == doctest::Approx(-2.0));
    CHECK(g.y == doctest::Approx(0.0));
    const GroundProblem p1({{0, 0}, {3, 4}}, {0.5, 0.5}, 1.0);
    CHECK(v_q(p1, {0, 0}) == doctest::Approx(2.5));
  }

  TEST_CASE("problem validation") {
    CHECK_THROWS_AS(GroundProblem({}, {}, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(GroundProblem({{0, 0}}, {0.5}, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(GroundProblem({{0, 0}, {1, 1}}, {1.0, 0.0}, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(GroundProblem({{0, 0}}, {1.0}, 0.9), std::invalid_argument);
    CHECK_THROWS_AS(GroundProblem({{0, 0}, {1}}, {0.5}, 2.0), std::invalid_argument);
  }

  TEST_CASE("uniqueness flag") {
    CHECK(check_uniqueness(GroundProblem({{0, 0}, {1, 0}}, {0.5, 0.5}, 1.5)));
    CHECK_FALSE(check_uniqueness(GroundProblem({{0, 0}, {1, 0}}, {0.5, 0.5}, 1.0)));
    CHECK_FALSE(check_uniqueness(GroundProblem({{0, 0}, {1, 1}, {2, 2}}, {0.2, 0.3, 0.5}, 1.0)));
    CHECK(check_uniqueness(GroundProblem({{0, 0}, {1, 0}, {0, 1}}, {0.2, 0.3, 0.5}, 1.0)));
  }

  TEST_CASE("q = 2 returns the weighted mean") {
    const GroundProblem p({{0, 0}, {2, 0}, {1, 3}}, {1.0 / 3, 1.0 / 3, 1.0 / 3}, 2.0);
    const auto s = ground_barycenter(p);
    CHECK(s.point.x == doctest::Approx(1.0));
    CHECK(s.point.y == doctest::Approx(1.0));
    CHECK(s.unique);
  }

  TEST_CASE("Fermat point of the unit right triangle") {
    const GroundProblem p({{0, 0}, {1, 0}, {0, 1}}, {1.0 / 3, 1.0 / 3, 1.0 / 3}, 1.0);
    const auto s = ground_barycenter(p);
    const double f = (3.0 - std::sqrt(3.0)) / 6.0;
    CHECK(std::abs(s.point.x - f) < 1e-6);
    CHECK(std::abs(s.point.y - f) < 1e-6);
    CHECK(s.unique);
  }

  TEST_CASE("q = 1 collinear problem lands on the segment") {
    const GroundProblem p({{0, 0}, {4, 2}}, {0.5, 0.5}, 1.0);
    const auto s = ground_barycenter(p);
    CHECK_FALSE(s.unique);
    CHECK(std::abs(s.point.x * 2.0 - s.point.y * 4.0) < 1e-6);
    CHECK(s.point.x >= -1e-6);
    CHECK(s.point.x <= 4.0 + 1e-6);
  }

  TEST_CASE("dominant target for q = 1") {
    const GroundProblem p({{0, 0}, {1, 0}, {0, 1}}, {0.6, 0.2, 0.2}, 1.0);
    const auto s = ground_barycenter(p);
    CHECK(norm(s.point) < 1e-6);
  }

  TEST_CASE("single target") {
    for (double q : {1.0, 1.5, 2.0, 3.0}) {
      const auto s = ground_barycenter(GroundProblem({{2, 5}}, {1.0}, q));
      CHECK(s.point.x == doctest::Approx(2.0));
      CHECK(s.point.y == doctest::Approx(5.0));
      CHECK(s.value == doctest::Approx(0.0).epsilon(1e-12));
    }
  }

  TEST_CASE("never worse than the mean, stays in the hull box, translates") {
    Rng rng(3);
    for (double q : {1.2, 1.5, 1.8, 2.5, 3.0}) {
      for (int trial = 0; trial < 20; ++trial) {
        const auto p = random_problem(rng, q, 4.0);
        const auto s = ground_barycenter(p);
        CHECK(s.converged);
        CHECK(s.value <= v_q(p, weighted_mean(p)) + 1e-12);
        double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
        for (const auto& y : p.targets()) {
          xmin = std::min(xmin, y.x), xmax = std::max(xmax, y.x);
          ymin = std::min(ymin, y.y), ymax = std::max(ymax, y.y);
        }
        CHECK(s.point.x >= xmin - 1e-6);
        CHECK(s.point.x <= xmax + 1e-6);
        CHECK(s.point.y >= ymin - 1e-6);
        CHECK(s.point.y <= ymax + 1e-6);
        // Stationarity.
        CHECK(norm(v_q_gradient(p, s.point)) < 1e-5);

        std::vector<Point2> moved(p.targets().begin(), p.targets().end());
        for (auto& y : moved) y = y + Point2{1.5, -2.0};
        const auto t = ground_barycenter(GroundProblem(moved, {p.weights().begin(), p.weights().end()}, q));
        CHECK(t.point.x == doctest::Approx(s.point.x + 1.5).epsilon(1e-6));
        CHECK(t.point.y == doctest::Approx(s.point.y - 2.0).epsilon(1e-6));
      }
    }
  }

  TEST_CASE("strict convexity along random chords") {
    Rng rng(8);
    for (double q : {1.2, 2.0, 3.0}) {
      for (int trial = 0; trial < 50; ++trial) {
        const auto p = random_problem(rng, q, 1.0);
        const Point2 a{rng.uniform(-1, 2), rng.uniform(-1, 2)}, b{rng.uniform(-1, 2), rng.uniform(-1, 2)};
        const double t = rng.uniform(0.05, 0.95);
        const auto mid = (1.0 - t) * a + t * b;
        CHECK(v_q(p, mid) < (1.0 - t) * v_q(p, a) + t * v_q(p, b));
      }
    }
  }

  TEST_CASE("agrees with the grid oracle") {
    Rng rng(12);
    for (double q : {1.2, 1.5, 1.8}) {
      for (int trial = 0; trial < 5; ++trial) {
        const auto p = random_problem(rng, q, 0.25);
        const auto s = ground_barycenter(p);
        const auto o = grid_search_oracle(p, 1e-3);
        CHECK(std::abs(s.point.x - o.x) <= 2e-3);
        CHECK(std::abs(s.point.y - o.y) <= 2e-3);
        CHECK(s.value <= v_q(p, o) + 1e-12);
      }
    }
  }

  TEST_CASE("grid oracle on a symmetric problem") {
    const GroundProblem p({{0, 0}, {1, 0}}, {0.5, 0.5}, 2.0);
    const auto o = grid_search_oracle(p, 0.25);
    CHECK(o.x == doctest::Approx(0.5));
    CHECK(o.y == doctest::Approx(0.0));
    CHECK_THROWS_AS((void)grid_search_oracle(p, 0.0), std::invalid_argument);
  }
}
