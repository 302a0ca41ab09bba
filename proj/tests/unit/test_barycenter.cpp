#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "pdrb/barycenter.hpp"

using namespace pdrb;

namespace {

const std::vector<double> kHalf{0.5, 0.5};

std::vector<PersistenceDiagram> two_singletons() {
  return {PersistenceDiagram({{0, 2}}), PersistenceDiagram({{0, 4}})};
}

}  // namespace

TEST_SUITE("barycenter") {
  TEST_CASE("Frechet energy examples") {
    const auto e = two_singletons();
    CHECK(frechet_energy(PersistenceDiagram({{0, 3}}), e, kHalf, 2.0) == doctest::Approx(1.0));
    CHECK(frechet_energy(PersistenceDiagram(), e, kHalf, 2.0) == doctest::Approx(5.0));
    const std::vector<PersistenceDiagram> one{PersistenceDiagram({{1, 4}, {0, 2}})};
    CHECK(frechet_energy(one[0], one, std::vector<double>{1.0}, 1.5) == 0.0);
  }

  TEST_CASE("single input is a fixed point") {
    const std::vector<PersistenceDiagram> one{PersistenceDiagram({{1, 4}, {0, 2}})};
    for (double q : {1.5, 2.0}) {
      BarycenterConfig c;
      c.q = q;
      const auto r = compute_barycenter(one, c);
      CHECK(r.diagram == one[0]);
      CHECK(r.energy_trace.back() == 0.0);
      CHECK(r.converged);
    }
  }

  TEST_CASE("two singletons at q = 2") {
    BarycenterConfig c;
    const auto r = compute_barycenter(two_singletons(), c);
    REQUIRE(r.diagram.size() == 1);
    CHECK(r.diagram[0].birth == doctest::Approx(0.0));
    CHECK(r.diagram[0].death == doctest::Approx(3.0));
    CHECK(r.energy_trace.back() == doctest::Approx(1.0));
    CHECK(r.energy_trace.front() == doctest::Approx(2.0));
  }

  TEST_CASE("two singletons at q = 1.5") {
    BarycenterConfig c;
    c.q = 1.5;
    const auto e = two_singletons();
    const auto r = compute_barycenter(e, c);
    REQUIRE(r.diagram.size() == 1);
    CHECK(std::abs(r.diagram[0].birth) < 1e-6);
    CHECK(r.diagram[0].death >= 2.0 - 1e-9);
    CHECK(r.diagram[0].death <= 4.0 + 1e-9);
    CHECK(r.energy_trace.back() <= frechet_energy(PersistenceDiagram({{0, 3}}), e, kHalf, 1.5) + 1e-9);
  }

  TEST_CASE("config validation") {
    const auto e = two_singletons();
    BarycenterConfig c;
    CHECK_THROWS_AS((void)compute_barycenter(std::vector<PersistenceDiagram>{}, c), std::invalid_argument);
    c.q = 1.0;
    CHECK_THROWS_AS((void)compute_barycenter(e, c), std::invalid_argument);
    c.allow_q1 = true;
    CHECK_NOTHROW((void)compute_barycenter(e, c));
    c = {};
    c.max_outer_iters = 0;
    CHECK_THROWS_AS((void)compute_barycenter(e, c), std::invalid_argument);
    c = {};
    c.weights = {0.7, 0.7};
    CHECK_THROWS_AS((void)compute_barycenter(e, c), std::invalid_argument);
    c.weights = {1.0};
    CHECK_THROWS_AS((void)compute_barycenter(e, c), std::invalid_argument);
    c = {};
    c.init = BarycenterInit::at(5);
    CHECK_THROWS_AS((void)compute_barycenter(e, c), std::invalid_argument);
  }

  TEST_CASE("weights pull the barycenter") {
    BarycenterConfig c;
    c.weights = {0.25, 0.75};
    const auto r = compute_barycenter(two_singletons(), c);
    REQUIRE(r.diagram.size() == 1);
    CHECK(r.diagram[0].death == doctest::Approx(3.5));
  }

  TEST_CASE("energy never increases on random ensembles") {
    Rng rng(21);
    for (double q : {1.2, 1.5, 2.0}) {
      for (int trial = 0; trial < 8; ++trial) {
        std::vector<PersistenceDiagram> e;
        const auto n = 2 + rng.uniform_index(4);
        for (std::size_t i = 0; i < n; ++i) e.push_back(testing::random_diagram(rng, 6));
        BarycenterConfig c;
        c.q = q;
        c.init = BarycenterInit::at(rng.uniform_index(n));
        const auto r = compute_barycenter(e, c);
        REQUIRE(r.energy_trace.size() == r.iterations + 1);
        for (std::size_t t = 1; t < r.energy_trace.size(); ++t)
          CHECK(r.energy_trace[t] <= r.energy_trace[t - 1] + 1e-9);
        const auto w = resolve_weights(n, c);
        CHECK(frechet_energy(PersistenceDiagram(r.working), e, w, q) == doctest::Approx(r.energy_trace.back()));
      }
    }
  }

  TEST_CASE("mean update coincides with the ground update at q = 2") {
    Rng rng(4);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<PersistenceDiagram> e;
      for (int i = 0; i < 3; ++i) e.push_back(testing::random_diagram(rng, 4));
      BarycenterConfig a, b;
      b.update = UpdateRule::ArithmeticMean;
      const auto ra = compute_barycenter(e, a), rb = compute_barycenter(e, b);
      REQUIRE(ra.working.size() == rb.working.size());
      for (std::size_t k = 0; k < ra.working.size(); ++k) {
        CHECK(ra.working[k].birth == doctest::Approx(rb.working[k].birth));
        CHECK(ra.working[k].death == doctest::Approx(rb.working[k].death));
      }
    }
  }

  TEST_CASE("arithmetic mean can increase the energy at q = 1") {
    const std::vector<PersistenceDiagram> e{PersistenceDiagram({{0, 10}}), PersistenceDiagram({{1, 12}}),
                                            PersistenceDiagram({{0, 40}})};
    const std::vector<double> w(3, 1.0 / 3.0);
    const std::vector<DiagramPoint> b0{{0, 10}};
    const auto matching = match_to_ensemble(b0, e, w, 1.0);
    for (const auto& t : matching.targets[0]) CHECK_FALSE(t.diagonal);
    const double before = matching.energy;

    BarycenterConfig ground;
    ground.q = 1.0;
    ground.allow_q1 = true;
    BarycenterConfig mean = ground;
    mean.update = UpdateRule::ArithmeticMean;
    const auto bg = update_barycenter(b0, matching, w, ground);
    const auto bm = update_barycenter(b0, matching, w, mean);
    CHECK(bm[0].birth == doctest::Approx(1.0 / 3.0));
    CHECK(bm[0].death == doctest::Approx(62.0 / 3.0));

    const double eg = frechet_energy(PersistenceDiagram(bg), e, w, 1.0);
    const double em = frechet_energy(PersistenceDiagram(bm), e, w, 1.0);
    CHECK(eg < before);
    CHECK(em > before);
  }

  TEST_CASE("ensemble order does not matter") {
    Rng rng(9);
    std::vector<PersistenceDiagram> e;
    for (int i = 0; i < 4; ++i) e.push_back(testing::random_diagram(rng, 5));
    BarycenterConfig c;
    c.q = 1.5;
    const auto r = compute_barycenter(e, c);
    std::vector<PersistenceDiagram> shuffled{e[0], e[3], e[1], e[2]};
    const auto s = compute_barycenter(shuffled, c);
    const auto a = testing::sorted_pairs(r.diagram), b = testing::sorted_pairs(s.diagram);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      CHECK(a[k].first == doctest::Approx(b[k].first));
      CHECK(a[k].second == doctest::Approx(b[k].second));
    }
  }

  TEST_CASE("epsilon prunes only the output") {
    BarycenterConfig c;
    c.epsilon = 10.0;
    const auto r = compute_barycenter(two_singletons(), c);
    CHECK(r.diagram.empty());
    CHECK(r.working.size() == 1);
  }
}

TEST_SUITE("barycenter") {
  TEST_CASE("permuting inputs with their weights keeps the energy trace") {
    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<PersistenceDiagram> e;
      for (int i = 0; i < 4; ++i) e.push_back(testing::random_diagram(rng, 5));
      BarycenterConfig c;
      c.q = 1.5;
      c.weights = {0.1, 0.2, 0.3, 0.4};
      c.init = BarycenterInit::at(2);
      const auto r = compute_barycenter(e, c);

      const std::vector<std::size_t> order{2, 0, 3, 1};
      std::vector<PersistenceDiagram> pe;
      BarycenterConfig pc = c;
      pc.weights.clear();
      for (auto i : order) {
        pe.push_back(e[i]);
        pc.weights.push_back(c.weights[i]);
      }
      pc.init = BarycenterInit::at(0);
      const auto s = compute_barycenter(pe, pc);
      REQUIRE(r.energy_trace.size() == s.energy_trace.size());
      for (std::size_t t = 0; t < r.energy_trace.size(); ++t)
        CHECK(s.energy_trace[t] == r.energy_trace[t]);
    }
  }
}
