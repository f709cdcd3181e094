// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lipgraph/graph.hpp"
#include "lipgraph/rng.hpp"

namespace lipgraph {

// Weighted shortest path by reduction to an unweighted directed graph:
// each edge becomes two opposite directed paths of ŵ(e) unit arcs.

struct GadgetEdge {
  EdgeId edge;
  std::int64_t level;    // ⌊w/b⌋
  double uniform;        // x(e)
  std::int64_t rounded;  // ŵ(e), level + 2 or level + 3
  bool included;         // ŵ(e) <= 12n/ε + 3 and e is not a self-loop
  std::vector<ArcId> forward_arcs;   // u -> v, in path order
  std::vector<ArcId> backward_arcs;  // v -> u, in path order
};

struct ArcOwner {
  EdgeId edge;
  bool forward;
  std::int32_t position;  // 0-based index along its path
};

// Vertices 0..n-1 are the original vertices; interior path vertices follow.
struct GadgetGraph {
  DirectedGraph graph;
  double scale = 0.0;  // b
  double length_limit = 0.0;
  int base_vertices = 0;
  std::vector<GadgetEdge> edges;
  std::vector<ArcOwner> arc_owner;
};

std::int64_t rounded_length(double w, double b, double x);

// Coupled x(f) under a perturbation +δ of f: x - δ/b, wrapped into (0, 1].
double shifted_uniform(double x, double delta, double b);

struct ScaleRange {
  double lo, hi;
};
// [εopt/(12n), εopt/(6n)].
ScaleRange gadget_scale_range(double opt, int n, double epsilon);

// Draws b and x from the stream. Requires opt > 0.
GadgetGraph build_gadget(const WeightedMultigraph& g, const WeightVector& w, Vertex s, Vertex t,
                         double epsilon, const CounterRng& rng);
// Deterministic core used by coupled runs; x has one entry per edge.
GadgetGraph build_gadget_with(const WeightedMultigraph& g, const WeightVector& w, double epsilon,
                              double b, std::span<const double> x);

// Throws MalformedWalk if a run of arcs does not cover a whole gadget path.
Walk map_walk_back(const WeightedMultigraph& g, const GadgetGraph& gadget, const Walk& hat);

struct LipSpRun {
  Walk walk;
  bool zero_optimum = false;
  double opt = 0.0;
  double scale = 0.0;
  std::size_t gadget_vertices = 0;
};

// Throws Unreachable. opt = 0 returns the fewest-hop path over zero-weight edges.
LipSpRun lip_sp_run(const WeightedMultigraph& g, const WeightVector& w, Vertex s, Vertex t,
                    double epsilon, const CounterRng& rng);
inline Walk lip_sp(const WeightedMultigraph& g, const WeightVector& w, Vertex s, Vertex t,
                   double epsilon, const CounterRng& rng) {
  return lip_sp_run(g, w, s, t, epsilon, rng).walk;
}

// Paired runs on w and w + δ·1_f. b is maximally coupled; when the scales
// agree x(f) moves by the wrap-around shift and every other draw is shared.
struct CoupledLipSp {
  Walk base;
  Walk shifted;
  bool scale_split = false;  // b != b'
  bool path_split = false;   // b = b' but f's gadget paths exist in only one run
  std::int64_t rounded_base = -1;
  std::int64_t rounded_shifted = -1;
};
CoupledLipSp lip_sp_coupled(const WeightedMultigraph& g, const WeightVector& w, Vertex s,
                            Vertex t, EdgeId f, double delta, double epsilon,
                            const CounterRng& rng);

}  // namespace lipgraph
