// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "lipgraph/graph.hpp"

namespace lipgraph {

// Result of merging the endpoints of one edge into a fresh vertex.
// Surviving vertices keep their relative order; the merged vertex is last.
struct ContractedGraph {
  WeightedMultigraph graph;
  Vertex merged = -1;
  std::vector<Vertex> vertex_map;  // old vertex -> new vertex
  std::vector<EdgeId> edge_map;    // old edge -> new edge, -1 for the contracted edge
  std::vector<EdgeId> origin;      // new edge -> old edge
};

// Other edges joining the two endpoints become flagged self-loops on the
// merged vertex. Throws SelfLoop when e is a loop.
ContractedGraph contract_edge(const WeightedMultigraph& g, EdgeId e);

// Expresses a walk of the contracted graph in edge ids of the original graph.
// Vertices are not translated back, so only the edge multiset is meaningful.
std::vector<EdgeId> original_edges(const ContractedGraph& c, const Walk& walk);

struct ContractedDigraph {
  DirectedGraph graph;
  Vertex merged = -1;
  std::vector<Vertex> vertex_map;
  std::vector<ArcId> arc_map;
  std::vector<ArcId> origin;
};

// Arc (u, v) is contractible when u and v both have in- and out-degree 1.
bool is_contractible(const DirectedGraph& g, ArcId a);

// Throws NotContractible.
ContractedDigraph contract_directed(const DirectedGraph& g, ArcId a);

}  // namespace lipgraph
