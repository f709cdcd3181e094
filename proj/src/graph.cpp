// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "lipgraph/graph.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "lipgraph/errors.hpp"

namespace lipgraph {
namespace {

// Counting-sort adjacency: ids land in ascending order within each bucket.
template <class KeyFn>
void build_csr(int n, int count, KeyFn&& keys, std::vector<std::int32_t>& off,
               std::vector<std::int32_t>& items) {
  off.assign(n + 1, 0);
  for (int id = 0; id < count; ++id) keys(id, [&](Vertex v) { ++off[v + 1]; });
  std::partial_sum(off.begin(), off.end(), off.begin());
  items.assign(off[n], 0);
  std::vector<std::int32_t> fill(off.begin(), off.end() - 1);
  for (int id = 0; id < count; ++id) keys(id, [&](Vertex v) { items[fill[v]++] = id; });
}

}  // namespace

WeightedMultigraph::WeightedMultigraph(int n, std::vector<Edge> edges,
                                       std::vector<bool> contraction_loops)
    : n_(n), edges_(std::move(edges)), loop_flags_(std::move(contraction_loops)) {
  if (n < 0) throw Error(ErrorCode::BadParams, "negative vertex count");
  if (!loop_flags_.empty() && loop_flags_.size() != edges_.size())
    throw Error(ErrorCode::BadParams, "loop flag table does not match edge count");
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw Error(ErrorCode::BadParams, "edge endpoint out of range");
  }
  build_csr(
      n, num_edges(),
      [&](int id, auto&& emit) {
        emit(edges_[id].u);
        if (edges_[id].v != edges_[id].u) emit(edges_[id].v);
      },
      offsets_, adj_);
}

DirectedGraph::DirectedGraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n < 0) throw Error(ErrorCode::BadParams, "negative vertex count");
  for (const Arc& a : arcs_) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
      throw Error(ErrorCode::BadParams, "arc endpoint out of range");
  }
  build_csr(
      n, num_arcs(), [&](int id, auto&& emit) { emit(arcs_[id].tail); }, out_off_, out_);
  build_csr(
      n, num_arcs(), [&](int id, auto&& emit) { emit(arcs_[id].head); }, in_off_, in_);
}

bool is_valid_walk(const WeightedMultigraph& g, const Walk& walk) {
  if (!g.valid_vertex(walk.source) || !g.valid_vertex(walk.target)) return false;
  Vertex at = walk.source;
  for (const Step& s : walk.steps) {
    if (!g.valid_edge(s.edge)) return false;
    const Edge& e = g.edge(s.edge);
    const Vertex from = s.forward ? e.u : e.v;
    if (from != at) return false;
    at = s.forward ? e.v : e.u;
  }
  return at == walk.target;
}

bool is_valid_walk(const DirectedGraph& g, const Walk& walk) {
  if (!g.valid_vertex(walk.source) || !g.valid_vertex(walk.target)) return false;
  Vertex at = walk.source;
  for (const Step& s : walk.steps) {
    if (s.edge < 0 || s.edge >= g.num_arcs() || !s.forward) return false;
    if (g.arc(s.edge).tail != at) return false;
    at = g.arc(s.edge).head;
  }
  return at == walk.target;
}

double walk_weight(const Walk& walk, const WeightVector& w) {
  double total = 0.0;
  for (const Step& s : walk.steps) total += w[s.edge];
  return total;
}

double total_weight(std::span<const EdgeId> edges, const WeightVector& w) {
  double total = 0.0;
  for (EdgeId e : edges) total += w[e];
  return total;
}

bool is_spanning_tree(const WeightedMultigraph& g, const SpanningTree& t) {
  const int n = g.num_vertices();
  if (static_cast<int>(t.edges.size()) != std::max(n - 1, 0)) return false;
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId e : t.edges) {
    if (!g.valid_edge(e)) return false;
    const Vertex a = find(g.edge(e).u), b = find(g.edge(e).v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

bool is_matching(const WeightedMultigraph& g, const Matching& m) {
  std::vector<bool> used(g.num_vertices(), false);
  for (EdgeId e : m.edges) {
    if (!g.valid_edge(e) || g.is_self_loop(e)) return false;
    const Edge& ed = g.edge(e);
    if (used[ed.u] || used[ed.v]) return false;
    used[ed.u] = used[ed.v] = true;
  }
  return true;
}

void validate_weights(const WeightedMultigraph& g, const WeightVector& w) {
  if (static_cast<int>(w.size()) != g.num_edges())
    throw Error(ErrorCode::BadParams, "weight vector length " + std::to_string(w.size()) +
                                          " does not match edge count " +
                                          std::to_string(g.num_edges()));
  for (double x : w) {
    if (!std::isfinite(x) || x < 0.0)
      throw Error(ErrorCode::BadParams, "weights must be finite and nonnegative");
  }
}

bool is_connected(const WeightedMultigraph& g) {
  const int n = g.num_vertices();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(x)) {
      const Vertex y = g.other(e, x);
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == n;
}

}  // namespace lipgraph
