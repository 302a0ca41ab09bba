#include <doctest.h>

#include <stdexcept>

#include "pdrb/assignment.hpp"
#include "pdrb/random.hpp"

using namespace pdrb;

namespace {

CostMatrix random_matrix(Rng& rng, std::size_t k, bool integer) {
  std::vector<double> e(k * k);
  for (auto& x : e) x = integer ? static_cast<double>(rng.uniform_index(5)) : rng.uniform(0, 10);
  return CostMatrix(k, std::move(e));
}

bool is_permutation_of(const std::vector<std::size_t>& p, std::size_t k) {
  std::vector<bool> seen(k, false);
  for (auto j : p) {
    if (j >= k || seen[j]) return false;
    seen[j] = true;
  }
  return p.size() == k;
}

}  // namespace

TEST_SUITE("assignment") {
  TEST_CASE("two by two example") {
    const CostMatrix c(2, {4, 2, 8, 0});
    const auto a = solve_assignment(c);
    CHECK(a.total_cost == 4.0);
    CHECK(a.permutation == std::vector<std::size_t>{0, 1});
    CHECK(brute_force_assignment(c).total_cost == 4.0);
  }

  TEST_CASE("trivial sizes") {
    CHECK(solve_assignment(CostMatrix(1, {8})).total_cost == 8.0);
    const auto empty = solve_assignment(CostMatrix(0, {}));
    CHECK(empty.total_cost == 0.0);
    CHECK(empty.permutation.empty());
  }

  TEST_CASE("matrix validation") {
    CHECK_THROWS_AS(CostMatrix(2, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(CostMatrix(1, {-1}), std::invalid_argument);
    CHECK_THROWS_AS(CostMatrix(1, {INFINITY}), std::invalid_argument);
    CHECK_THROWS_AS((void)brute_force_assignment(CostMatrix(9, std::vector<double>(81, 1.0))), std::invalid_argument);
  }

  TEST_CASE("agrees with enumeration on random matrices") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const auto k = 1 + rng.uniform_index(7);
      const auto c = random_matrix(rng, k, trial % 2 == 0);
      const auto fast = solve_assignment(c);
      const auto slow = brute_force_assignment(c);
      REQUIRE(is_permutation_of(fast.permutation, k));
      CHECK(fast.total_cost == slow.total_cost);
      CHECK(assignment_cost(c, fast.permutation) == fast.total_cost);
    }
  }

  TEST_CASE("brute force breaks ties lexicographically") {
    const auto a = brute_force_assignment(CostMatrix(3, std::vector<double>(9, 1.0)));
    CHECK(a.permutation == std::vector<std::size_t>{0, 1, 2});
  }

  TEST_CASE("adding a constant to a row keeps the optimum") {
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
      const auto k = 2 + rng.uniform_index(5);
      const auto c = random_matrix(rng, k, true);
      auto e = c.entries();
      const auto row = rng.uniform_index(k);
      for (std::size_t j = 0; j < k; ++j) e[row * k + j] += 3.0;
      const CostMatrix shifted(k, e);
      CHECK(solve_assignment(shifted).total_cost == solve_assignment(c).total_cost + 3.0);
    }
  }

  TEST_CASE("cost is independent of summation order") {
    const CostMatrix c(3, {0.1, 1e16, 0, 0, 0.2, 1e16, 1e16, 0, 0.3});
    const std::vector<std::size_t> p{0, 1, 2};
    CHECK(assignment_cost(c, p) == doctest::Approx(0.6));
  }

  TEST_CASE("augmented costs") {
    const AugmentedPoint x{{0, 2}, PointKind::OffDiagonal};
    const AugmentedPoint d1{{1, 1}, PointKind::Diagonal};
    const AugmentedPoint d2{{3, 3}, PointKind::Diagonal};
    CHECK(transport_cost(d1, d2, 2.0) == 0.0);
    CHECK(transport_cost(x, d1, 2.0) == doctest::Approx(2.0));
    CHECK(transport_cost(x, d2, 2.0) == doctest::Approx(10.0));
    CHECK(transport_cost(x, d2, 2.0, DiagonalCost::Perpendicular) == doctest::Approx(2.0));
    CHECK(transport_cost(d2, x, 1.0, DiagonalCost::Perpendicular) == doctest::Approx(std::sqrt(2.0)));
    CHECK(transport_cost(x, {{0, 5}, PointKind::OffDiagonal}, 1.5) == doctest::Approx(std::pow(3.0, 1.5)));
  }

  TEST_CASE("cost matrix follows the augmented order") {
    const std::vector<DiagramPoint> x{{0, 4}}, y{{1, 3}};
    const auto m = build_cost_matrix(augment(x, y), 2.0);
    REQUIRE(m.size() == 2);
    CHECK(m(0, 0) == doctest::Approx(2.0));
    CHECK(m(0, 1) == doctest::Approx(8.0));
    CHECK(m(1, 0) == doctest::Approx(2.0));
    CHECK(m(1, 1) == 0.0);
    CHECK_THROWS_AS((void)build_cost_matrix(augment(x, y), 0.5), std::invalid_argument);
  }
}

TEST_SUITE("assignment") {
  TEST_CASE("cost matrix examples") {
    const std::vector<DiagramPoint> a{{0, 2}}, b{{0, 4}}, none;
    CHECK(build_cost_matrix(augment(a, b), 2.0).entries() == std::vector<double>{4, 2, 8, 0});
    CHECK(build_cost_matrix(augment(none, b), 2.0).entries() == std::vector<double>{8});
    const auto same = build_cost_matrix(augment(b, b), 1.0);
    for (std::size_t i = 0; i < same.size(); ++i) CHECK(same(i, i) == 0.0);
  }
}
