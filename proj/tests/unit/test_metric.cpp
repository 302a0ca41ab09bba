#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "pdrb/metric.hpp"

using namespace pdrb;

TEST_SUITE("metric") {
  TEST_CASE("single point against the empty diagram") {
    const PersistenceDiagram x({{0, 2}}), empty;
    CHECK(wasserstein_distance(x, empty, 2.0) == doctest::Approx(std::sqrt(2.0)));
    CHECK(wasserstein_distance(x, empty, 1.0) == doctest::Approx(std::sqrt(2.0)));
    CHECK(wasserstein_cost(x, empty, 3.0) == doctest::Approx(std::pow(std::sqrt(2.0), 3.0)));
    CHECK(wasserstein_distance(empty, empty, 2.0) == 0.0);
  }

  TEST_CASE("diagonal matching beats a long transport") {
    const PersistenceDiagram x({{0, 1}}), y({{10, 11}});
    // Both points go to the diagonal: 2 * (1/sqrt2)^2 = 1.
    CHECK(wasserstein_cost(x, y, 2.0) == doctest::Approx(1.0));
  }

  TEST_CASE("two point example") {
    const PersistenceDiagram x({{0, 4}, {1, 2}}), y({{0, 5}});
    // (0,4)->(0,5) costs 1, (1,2) to the diagonal costs 0.5.
    CHECK(wasserstein_cost(x, y, 2.0) == doctest::Approx(1.5));
  }

  TEST_CASE("zero persistence points are invisible") {
    const PersistenceDiagram x({{0, 3}}), y({{0, 3}, {2, 2}});
    CHECK(wasserstein_distance(x, y, 2.0) == 0.0);
  }

  TEST_CASE("rejects invalid q") {
    const PersistenceDiagram x({{0, 1}});
    CHECK_THROWS_AS((void)wasserstein_distance(x, x, 0.5), std::invalid_argument);
    CHECK_THROWS_AS((void)wasserstein_distance(x, x, NAN), std::invalid_argument);
    CHECK_THROWS_AS((void)wasserstein_distance(x, x, INFINITY), std::invalid_argument);
  }

  TEST_CASE("axioms on random diagrams") {
    Rng rng(5);
    for (double q : {1.0, 1.5, 2.0, 3.0}) {
      for (int trial = 0; trial < 25; ++trial) {
        const auto a = testing::random_diagram(rng, 4), b = testing::random_diagram(rng, 4),
                   c = testing::random_diagram(rng, 4);
        const double ab = wasserstein_distance(a, b, q), ba = wasserstein_distance(b, a, q);
        CHECK(ab == ba);
        CHECK(wasserstein_distance(a, a, q) == 0.0);
        CHECK(ab <= wasserstein_distance(a, c, q) + wasserstein_distance(c, b, q) + 1e-9);
        CHECK(ab >= 0.0);
      }
    }
  }

  TEST_CASE("perpendicular mode never costs more") {
    Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
      const auto a = testing::random_diagram(rng, 4), b = testing::random_diagram(rng, 4);
      CHECK(wasserstein_cost(a, b, 2.0, DiagonalCost::Perpendicular) <= wasserstein_cost(a, b, 2.0) + 1e-12);
    }
  }

  TEST_CASE("optimal plan is a permutation with the reported cost") {
    const std::vector<DiagramPoint> x{{0, 4}, {1, 2}}, y{{0, 5}};
    const auto plan = optimal_plan(x, y, 2.0);
    CHECK(plan.pair.size() == 3);
    CHECK(plan.assignment.permutation.size() == 3);
    CHECK(plan.assignment.total_cost == doctest::Approx(1.5));
  }

  TEST_CASE("distance matrix") {
    const std::vector<PersistenceDiagram> e{PersistenceDiagram({{0, 2}}), PersistenceDiagram(),
                                            PersistenceDiagram({{0, 2}})};
    const auto m = distance_matrix(e, 2.0);
    REQUIRE(m.size == 3);
    CHECK(m.q == 2.0);
    CHECK(m(0, 1) == doctest::Approx(std::sqrt(2.0)));
    CHECK(m(1, 0) == m(0, 1));
    CHECK(m(0, 2) == 0.0);
    for (std::size_t i = 0; i < 3; ++i) CHECK(m(i, i) == 0.0);
  }
}
