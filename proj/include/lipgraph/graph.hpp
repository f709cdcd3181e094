// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace lipgraph {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;
using ArcId = std::int32_t;
using WeightVector = std::vector<double>;

inline constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max();

struct Edge {
  Vertex u;
  Vertex v;
};

// Undirected multigraph. Topology only; weights live in a WeightVector indexed
// by edge id so one graph can be paired with many weight vectors.
class WeightedMultigraph {
 public:
  WeightedMultigraph() = default;
  // `contraction_loops[e]` marks self-loops created by contraction; empty
  // means none.
  WeightedMultigraph(int n, std::vector<Edge> edges, std::vector<bool> contraction_loops = {});

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool is_self_loop(EdgeId e) const { return edges_[e].u == edges_[e].v; }
  bool is_contraction_loop(EdgeId e) const { return !loop_flags_.empty() && loop_flags_[e]; }
  Vertex other(EdgeId e, Vertex x) const { return edges_[e].u == x ? edges_[e].v : edges_[e].u; }
  bool valid_vertex(Vertex v) const { return v >= 0 && v < n_; }
  bool valid_edge(EdgeId e) const { return e >= 0 && e < num_edges(); }

  // Incident edge ids in ascending order; a self-loop is listed once.
  std::span<const EdgeId> incident(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<bool> loop_flags_;
  std::vector<std::int32_t> offsets_{0};
  std::vector<EdgeId> adj_;
};

struct Arc {
  Vertex tail;
  Vertex head;
};

class DirectedGraph {
 public:
  DirectedGraph() = default;
  DirectedGraph(int n, std::vector<Arc> arcs);

  int num_vertices() const { return n_; }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  const Arc& arc(ArcId a) const { return arcs_[a]; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool valid_vertex(Vertex v) const { return v >= 0 && v < n_; }

  std::span<const ArcId> out_arcs(Vertex v) const {
    return {out_.data() + out_off_[v], out_.data() + out_off_[v + 1]};
  }
  std::span<const ArcId> in_arcs(Vertex v) const {
    return {in_.data() + in_off_[v], in_.data() + in_off_[v + 1]};
  }
  int out_degree(Vertex v) const { return out_off_[v + 1] - out_off_[v]; }
  int in_degree(Vertex v) const { return in_off_[v + 1] - in_off_[v]; }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::int32_t> out_off_{0}, in_off_{0};
  std::vector<ArcId> out_, in_;
};

// One traversal of an edge. `forward` means from edge.u to edge.v; arcs of a
// DirectedGraph are always traversed forward.
struct Step {
  EdgeId edge;
  bool forward;
  friend bool operator==(const Step&, const Step&) = default;
};

struct Walk {
  Vertex source = 0;
  Vertex target = 0;
  std::vector<Step> steps;

  std::size_t length() const { return steps.size(); }
  friend bool operator==(const Walk&, const Walk&) = default;
};

bool is_valid_walk(const WeightedMultigraph& g, const Walk& walk);
bool is_valid_walk(const DirectedGraph& g, const Walk& walk);
double walk_weight(const Walk& walk, const WeightVector& w);

// Edge ids sorted ascending.
struct SpanningTree {
  std::vector<EdgeId> edges;
};

struct Matching {
  std::vector<EdgeId> edges;
};

bool is_spanning_tree(const WeightedMultigraph& g, const SpanningTree& t);
bool is_matching(const WeightedMultigraph& g, const Matching& m);
double total_weight(std::span<const EdgeId> edges, const WeightVector& w);

// Throws BadParams unless w has one finite nonnegative entry per edge.
void validate_weights(const WeightedMultigraph& g, const WeightVector& w);

bool is_connected(const WeightedMultigraph& g);

struct WeightedGraph {
  WeightedMultigraph graph;
  WeightVector weights;
};

}  // namespace lipgraph
