// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "lipgraph/algorithms.hpp"
#include "lipgraph/contraction.hpp"
#include "lipgraph/errors.hpp"
#include "lipgraph/graph_io.hpp"
#include "support.hpp"

using namespace lipgraph;
using lipgraph::testing::Rng;

namespace {

struct BruteDistances {
  std::vector<double> hops, weight;
};

// Every simple path out of s; shortest walks are simple under nonnegative weights.
BruteDistances enumerate_paths(const WeightedMultigraph& g, const WeightVector& w, Vertex s) {
  const double inf = std::numeric_limits<double>::infinity();
  BruteDistances out{std::vector<double>(g.num_vertices(), inf),
                     std::vector<double>(g.num_vertices(), inf)};
  std::vector<bool> on_path(g.num_vertices());
  auto dfs = [&](auto&& self, Vertex v, double hops, double weight) -> void {
    out.hops[v] = std::min(out.hops[v], hops);
    out.weight[v] = std::min(out.weight[v], weight);
    on_path[v] = true;
    for (EdgeId e : g.incident(v)) {
      const Vertex x = g.other(e, v);
      if (!on_path[x]) self(self, x, hops + 1, weight + w[e]);
    }
    on_path[v] = false;
  };
  dfs(dfs, s, 0, 0);
  return out;
}

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

bool forms_spanning_tree(const WeightedMultigraph& g, const std::vector<EdgeId>& ids) {
  std::vector<int> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  for (EdgeId e : ids) {
    const int a = find(parent, g.edge(e).u), b = find(parent, g.edge(e).v);
    if (a == b) return false;
    parent[a] = b;
  }
  return static_cast<int>(ids.size()) == g.num_vertices() - 1;
}

double brute_mst_weight(const WeightedMultigraph& g, const WeightVector& w) {
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 0; mask < (1u << g.num_edges()); ++mask) {
    if (std::popcount(mask) != g.num_vertices() - 1) continue;
    std::vector<EdgeId> ids;
    for (int e = 0; e < g.num_edges(); ++e)
      if (mask >> e & 1) ids.push_back(e);
    if (forms_spanning_tree(g, ids)) best = std::min(best, total_weight(ids, w));
  }
  return best;
}

double brute_matching_weight(const WeightedMultigraph& g, const WeightVector& w) {
  double best = 0;
  for (std::uint32_t mask = 0; mask < (1u << g.num_edges()); ++mask) {
    std::vector<bool> used(g.num_vertices());
    double total = 0;
    bool ok = true;
    for (int e = 0; e < g.num_edges() && ok; ++e) {
      if (!(mask >> e & 1)) continue;
      const Edge ed = g.edge(e);
      if (ed.u == ed.v || used[ed.u] || used[ed.v]) ok = false;
      used[ed.u] = used[ed.v] = true;
      total += w[e];
    }
    if (ok) best = std::max(best, total);
  }
  return best;
}

}  // namespace

TEST_CASE("bfs and dijkstra agree with path enumeration") {
  Rng rng(101);
  for (int round = 0; round < 300; ++round) {
    const int n = lipgraph::testing::uniform_int(rng, 2, 7);
    const auto g = lipgraph::testing::random_connected(rng, n, lipgraph::testing::uniform_int(rng, 0, 6));
    const auto w = lipgraph::testing::integer_weights(rng, g.num_edges(), 0, 5);
    const Vertex s = lipgraph::testing::uniform_int(rng, 0, n - 1);
    const auto brute = enumerate_paths(g, w, s);
    const auto hops = bfs_dist(g, s);
    const auto sp = dijkstra(g, w, s);
    for (Vertex v = 0; v < n; ++v) {
      CHECK(static_cast<double>(hops[v]) == brute.hops[v]);
      CHECK(sp.dist[v] == brute.weight[v]);
      const auto walk = dijkstra_path(g, w, s, v);
      REQUIRE(walk);
      CHECK(is_valid_walk(g, *walk));
      CHECK(walk_weight(*walk, w) == brute.weight[v]);
      const auto hop_walk = bfs_path(g, s, v);
      REQUIRE(hop_walk);
      CHECK(static_cast<double>(hop_walk->length()) == brute.hops[v]);
    }
  }
}

TEST_CASE("unreachable vertices") {
  const WeightedMultigraph g(3, {{0, 1}});
  CHECK(bfs_dist(g, 0)[2] == kUnreachable);
  CHECK(std::isinf(dijkstra(g, {1.0}, 0).dist[2]));
  CHECK_FALSE(bfs_path(g, 0, 2));
  CHECK_FALSE(is_connected(g));
}

TEST_CASE("kruskal agrees with spanning tree enumeration") {
  Rng rng(202);
  for (int round = 0; round < 300; ++round) {
    const int n = lipgraph::testing::uniform_int(rng, 2, 6);
    const auto g = lipgraph::testing::random_connected(rng, n, lipgraph::testing::uniform_int(rng, 0, 5));
    const auto w = lipgraph::testing::integer_weights(rng, g.num_edges(), 0, 4);
    const auto tree = kruskal_mst(g, w);
    CHECK(is_spanning_tree(g, tree));
    CHECK(total_weight(tree.edges, w) == brute_mst_weight(g, w));
  }
}

TEST_CASE("kruskal breaks ties by edge id and rejects disconnected graphs") {
  const WeightedMultigraph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(kruskal_mst(tri, {1, 1, 1}).edges == std::vector<EdgeId>{0, 1});
  CHECK(kruskal_mst(tri, {1, 2, 3}).edges == std::vector<EdgeId>{0, 1});
  CHECK(kruskal_mst(tri, {3, 2, 1}).edges == std::vector<EdgeId>{1, 2});
  try {
    kruskal_mst(WeightedMultigraph(3, {{0, 1}}), {1});
    FAIL("expected DisconnectedGraph");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DisconnectedGraph);
  }
}

TEST_CASE("exact matching agrees with subset enumeration") {
  Rng rng(303);
  for (int round = 0; round < 200; ++round) {
    const int n = lipgraph::testing::uniform_int(rng, 2, 8);
    const auto g = lipgraph::testing::random_connected(rng, n, lipgraph::testing::uniform_int(rng, 0, 5));
    const auto w = lipgraph::testing::integer_weights(rng, g.num_edges(), 0, 6);
    const auto m = exact_max_weight_matching(g, w);
    CHECK(is_matching(g, m));
    CHECK(total_weight(m.edges, w) == brute_matching_weight(g, w));
    for (EdgeId e : m.edges) CHECK(w[e] > 0);
  }
  // Path of three edges: the two ends beat the middle.
  const WeightedMultigraph path(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(exact_max_weight_matching(path, {2, 3, 2}).edges == std::vector<EdgeId>{0, 2});
  CHECK(exact_max_weight_matching(path, {1, 3, 1}).edges == std::vector<EdgeId>{1});
  std::vector<Edge> many(25, Edge{0, 1});
  CHECK_THROWS_AS(exact_max_weight_matching(WeightedMultigraph(2, many), WeightVector(25, 1.0)), Error);
}

TEST_CASE("hungarian agrees with exact matching on complete bipartite graphs") {
  Rng rng(404);
  for (int round = 0; round < 200; ++round) {
    const int rows = lipgraph::testing::uniform_int(rng, 1, 4);
    const int cols = lipgraph::testing::uniform_int(rng, 1, 24 / rows > 6 ? 6 : 24 / rows);
    const auto w = lipgraph::testing::random_matrix(rng, rows, cols);
    const auto h = hungarian_bipartite(w);
    const auto cb = complete_bipartite(w);
    const auto exact = exact_max_weight_matching(cb.graph, cb.weights);
    CHECK(h.value == doctest::Approx(total_weight(exact.edges, cb.weights)).epsilon(1e-12));
    double sum = 0;
    std::vector<bool> row_used(rows), col_used(cols);
    for (auto [i, j] : h.pairs) {
      CHECK_FALSE(row_used[i]);
      CHECK_FALSE(col_used[j]);
      row_used[i] = col_used[j] = true;
      sum += w(i, j);
    }
    CHECK(sum == doctest::Approx(h.value));
  }
  Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(2, 3);
  CHECK(hungarian_bipartite(zero).pairs.empty());
}

TEST_CASE("undirected contraction") {
  // Triangle plus pendant: contracting {0,1} turns the parallel pair into a loop.
  const WeightedMultigraph g(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  const auto c = contract_edge(g, 0);
  CHECK(c.graph.num_vertices() == 3);
  CHECK(c.graph.num_edges() == 3);
  CHECK(c.edge_map[0] == -1);
  CHECK(c.vertex_map[0] == c.merged);
  CHECK(c.vertex_map[1] == c.merged);
  CHECK_FALSE(c.graph.is_contraction_loop(c.edge_map[1]));
  const auto c2 = contract_edge(c.graph, c.edge_map[1]);
  CHECK(c2.graph.is_contraction_loop(c2.edge_map[c.edge_map[2]]));
  const auto walk = *bfs_path(c.graph, c.vertex_map[0], c.vertex_map[3]);
  for (EdgeId id : original_edges(c, walk)) CHECK(id != 0);

  CHECK_THROWS_AS(contract_edge(WeightedMultigraph(1, {{0, 0}}), 0), Error);
  CHECK_THROWS_AS(contract_edge(g, 9), Error);
}

TEST_CASE("directed contraction preserves reachability") {
  // 0 -> 1 -> 2 -> 3 plus 0 -> 3: arc 1 joins two degree-one vertices.
  const DirectedGraph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(is_contractible(g, 1));
  CHECK_FALSE(is_contractible(g, 0));
  CHECK_FALSE(is_contractible(g, 3));
  const auto c = contract_directed(g, 1);
  CHECK(c.graph.num_arcs() == 3);
  for (Vertex a = 0; a < 4; ++a) {
    const auto before = bfs_dist(g, a);
    const auto after = bfs_dist(c.graph, c.vertex_map[a]);
    for (Vertex b = 0; b < 4; ++b) {
      // The two endpoints of the contracted arc become one vertex.
      if (c.vertex_map[a] == c.vertex_map[b]) continue;
      CHECK((before[b] != kUnreachable) == (after[c.vertex_map[b]] != kUnreachable));
    }
  }
  CHECK(bfs_dist(c.graph, c.vertex_map[0])[c.vertex_map[3]] == 1);
  CHECK_THROWS_AS(contract_directed(g, 0), Error);
}

TEST_CASE("edge list and matrix round trips") {
  const WeightedMultigraph g(3, {{0, 1}, {1, 2}, {2, 2}});
  const WeightVector w{1.5, 0, 7};
  std::stringstream ss;
  write_edge_list(ss, g, w);
  const auto back = read_edge_list(ss);
  CHECK(back.graph.num_vertices() == 3);
  CHECK(back.graph.num_edges() == 3);
  CHECK(back.weights == w);
  CHECK(back.graph.edge(2).u == 2);

  Eigen::MatrixXd m(2, 2);
  m << 0.25, 1, 2, 3.5;
  std::stringstream ms;
  write_bipartite(ms, m);
  CHECK(read_bipartite(ms) == m);

  std::stringstream bad("2 1\n0 5 1\n");
  try {
    read_edge_list(bad);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
  std::stringstream truncated("2 2\n0 1 1\n");
  CHECK_THROWS_AS(read_edge_list(truncated), Error);
  CHECK_THROWS_AS(validate_weights(g, {1, -1, 0}), Error);
  CHECK_THROWS_AS(validate_weights(g, {1, 1}), Error);
}
