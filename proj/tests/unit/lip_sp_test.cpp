// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "lipgraph/algorithms.hpp"
#include "lipgraph/errors.hpp"
#include "lipgraph/lip_sp.hpp"
#include "lipgraph/trials.hpp"
#include "support.hpp"

using namespace lipgraph;

TEST_CASE("rounded lengths") {
  CHECK(rounded_length(2.5, 1.0, 0.5) == 4);
  CHECK(rounded_length(2.5, 1.0, 0.51) == 5);
  CHECK(rounded_length(2.0, 1.0, 0.999) == 4);
  CHECK(rounded_length(0.0, 0.3, 0.7) == 2);
  // b·E[ŵ] = w + 2b when x is uniform.
  lipgraph::testing::Rng rng(1);
  for (int round = 0; round < 50; ++round) {
    const double w = lipgraph::testing::uniform_real(rng, 0, 20);
    const double b = lipgraph::testing::uniform_real(rng, 0.1, 2);
    constexpr int kGrid = 100000;
    double mean = 0;
    for (int i = 0; i < kGrid; ++i) mean += static_cast<double>(rounded_length(w, b, (i + 0.5) / kGrid));
    CHECK(b * mean / kGrid == doctest::Approx(w + 2 * b).epsilon(1e-4));
  }
}

TEST_CASE("shifted uniforms move the rounded length by the floor or ceiling of δ/b") {
  lipgraph::testing::Rng rng(2);
  for (int round = 0; round < 20000; ++round) {
    const double w = lipgraph::testing::uniform_real(rng, 0, 10);
    const double b = lipgraph::testing::uniform_real(rng, 0.1, 1);
    const double delta = lipgraph::testing::uniform_real(rng, 0, 3);
    const double x = lipgraph::testing::uniform_real(rng, 0, 1);
    const double x2 = shifted_uniform(x, delta, b);
    REQUIRE(x2 > 0.0);
    REQUIRE(x2 <= 1.0);
    const auto diff = rounded_length(w + delta, b, x2) - rounded_length(w, b, x);
    const auto lo = static_cast<std::int64_t>(std::floor(delta / b));
    CHECK((diff == lo || diff == lo + 1));
  }
}

TEST_CASE("gadget layout and walk mapping") {
  lipgraph::testing::Rng rng(3);
  for (int round = 0; round < 100; ++round) {
    const int n = lipgraph::testing::uniform_int(rng, 2, 9);
    const auto g = lipgraph::testing::random_connected(rng, n, lipgraph::testing::uniform_int(rng, 0, 6));
    const auto w = lipgraph::testing::integer_weights(rng, g.num_edges(), 1, 5);
    const Vertex s = 0, t = n - 1;
    const double eps = 0.5;
    const auto gadget = build_gadget(g, w, s, t, eps, CounterRng(round, 0));
    std::int64_t arcs = 0;
    for (const GadgetEdge& ge : gadget.edges) {
      CHECK(ge.level == static_cast<std::int64_t>(std::floor(w[ge.edge] / gadget.scale)));
      CHECK(ge.rounded == rounded_length(w[ge.edge], gadget.scale, ge.uniform));
      CHECK(ge.included == (static_cast<double>(ge.rounded) <= gadget.length_limit));
      if (!ge.included) continue;
      arcs += 2 * ge.rounded;
      REQUIRE(static_cast<std::int64_t>(ge.forward_arcs.size()) == ge.rounded);
      CHECK(gadget.graph.arc(ge.forward_arcs.front()).tail == g.edge(ge.edge).u);
      CHECK(gadget.graph.arc(ge.forward_arcs.back()).head == g.edge(ge.edge).v);
      CHECK(gadget.graph.arc(ge.backward_arcs.front()).tail == g.edge(ge.edge).v);
      for (std::size_t p = 1; p < ge.forward_arcs.size(); ++p)
        CHECK(gadget.graph.arc(ge.forward_arcs[p - 1]).head == gadget.graph.arc(ge.forward_arcs[p]).tail);
    }
    CHECK(gadget.graph.num_arcs() == arcs);
    const auto hat = *bfs_path(gadget.graph, s, t);
    const auto walk = map_walk_back(g, gadget, hat);
    CHECK(is_valid_walk(g, walk));
    std::int64_t covered = 0;
    for (const Step& step : walk.steps) covered += gadget.edges[step.edge].rounded;
    CHECK(covered == static_cast<std::int64_t>(hat.length()));
    if (hat.length() > 1) {
      Walk partial = hat;
      partial.steps.pop_back();
      CHECK_THROWS_AS(map_walk_back(g, gadget, partial), Error);
    }
  }
}

TEST_CASE("heavy edges are left out of the gadget") {
  const WeightedMultigraph g(2, {{0, 1}, {0, 1}});
  const WeightVector w{1, 1000};
  const auto gadget = build_gadget(g, w, 0, 1, 0.5, CounterRng(1, 0));
  CHECK(gadget.edges[0].included);
  CHECK_FALSE(gadget.edges[1].included);
  CHECK(gadget.length_limit == doctest::Approx(12.0 * 2 / 0.5 + 3));
}

TEST_CASE("parallel edges of weight one and two always give the lighter edge") {
  const WeightedMultigraph g(2, {{0, 1}, {0, 1}});
  for (std::uint32_t t = 0; t < 200; ++t) {
    const auto run = lip_sp_run(g, {1, 2}, 0, 1, 0.5, CounterRng(4, t));
    REQUIRE(run.walk.steps.size() == 1);
    CHECK(run.walk.steps[0].edge == 0);
    const auto r = gadget_scale_range(1, 2, 0.5);
    CHECK(run.scale >= r.lo);
    CHECK(run.scale <= r.hi);
  }
}

TEST_CASE("zero optimum returns a zero-weight path without sampling") {
  const WeightedMultigraph g(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto run = lip_sp_run(g, {0, 0, 1}, 0, 2, 0.3, CounterRng(1, 0));
  CHECK(run.zero_optimum);
  CHECK(walk_weight(run.walk, {0, 0, 1}) == 0);
  CHECK(run.walk.length() == 2);
  CHECK_THROWS_AS(lip_sp(WeightedMultigraph(3, {{0, 1}}), {1}, 0, 2, 0.3, CounterRng(1, 0)), Error);
  CHECK_THROWS_AS(lip_sp(g, {1, 1, 1}, 0, 2, 1.0, CounterRng(1, 0)), Error);
}

TEST_CASE("walks stay within 1 + ε of optimal and coupled base runs match plain runs") {
  lipgraph::testing::Rng rng(5);
  for (int round = 0; round < 40; ++round) {
    const int n = lipgraph::testing::uniform_int(rng, 2, 8);
    const auto g = lipgraph::testing::random_connected(rng, n, lipgraph::testing::uniform_int(rng, 0, 5));
    const auto w = lipgraph::testing::real_weights(rng, g.num_edges(), 0.5, 4);
    const double eps = lipgraph::testing::uniform_real(rng, 0.2, 0.9);
    const double opt = dijkstra(g, w, 0).dist[n - 1];
    const EdgeId f = lipgraph::testing::uniform_int(rng, 0, g.num_edges() - 1);
    for (std::uint32_t t = 0; t < 10; ++t) {
      const CounterRng crng(round, t);
      const auto walk = lip_sp(g, w, 0, n - 1, eps, crng);
      REQUIRE(is_valid_walk(g, walk));
      CHECK(walk_weight(walk, w) <= (1 + eps) * opt * (1 + 1e-12));
      const auto c = lip_sp_coupled(g, w, 0, n - 1, f, 0.1, eps, crng);
      CHECK(c.base == walk);
      CHECK(is_valid_walk(g, c.shifted));
      if (!c.scale_split && !c.path_split && c.rounded_base == c.rounded_shifted)
        CHECK(c.base == c.shifted);
    }
  }
}

TEST_CASE("parallel and serial trials agree") {
  lipgraph::testing::Rng rng(6);
  const auto g = lipgraph::testing::random_connected(rng, 8, 6);
  const auto w = lipgraph::testing::real_weights(rng, g.num_edges(), 0.5, 4);
  auto runs = [&](Execution exec) {
    return run_trials(300, exec, [&](std::uint32_t t) { return lip_sp(g, w, 0, 7, 0.5, CounterRng(9, t)); });
  };
  CHECK(runs(Execution::Serial) == runs(Execution::Parallel));
}
