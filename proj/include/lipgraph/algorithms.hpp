// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <optional>
#include <utility>
#include <vector>

#include "lipgraph/graph.hpp"

namespace lipgraph {

// Hop distances; kUnreachable marks unreachable vertices. Self-loops are
// ignored. Undirected graphs are treated as unit-length.
std::vector<std::int64_t> bfs_dist(const WeightedMultigraph& g, Vertex s);
std::vector<std::int64_t> bfs_dist(const DirectedGraph& g, Vertex s);
// Distances *to* t along arc directions.
std::vector<std::int64_t> bfs_dist_to(const DirectedGraph& g, Vertex t);

// Fewest-hop walk, first discovery wins with neighbours scanned in ascending
// edge id. nullopt when t is unreachable. `usable` filters edges (undirected).
std::optional<Walk> bfs_path(const WeightedMultigraph& g, Vertex s, Vertex t,
                             const std::vector<bool>* usable = nullptr);
std::optional<Walk> bfs_path(const DirectedGraph& g, Vertex s, Vertex t);

struct ShortestPaths {
  std::vector<double> dist;  // +inf when unreachable
  std::vector<EdgeId> pred;  // -1 at the source and unreachable vertices
};

ShortestPaths dijkstra(const WeightedMultigraph& g, const WeightVector& w, Vertex s);
std::optional<Walk> dijkstra_path(const WeightedMultigraph& g, const WeightVector& w, Vertex s,
                                  Vertex t);

// Ties broken by ascending edge id. Throws DisconnectedGraph.
SpanningTree kruskal_mst(const WeightedMultigraph& g, const WeightVector& w);

// Exhaustive branch and bound. Zero-weight edges are never selected; among
// optimal matchings the lexicographically smallest id list wins. Throws
// TooLarge when m > 24.
Matching exact_max_weight_matching(const WeightedMultigraph& g, const WeightVector& w);
inline constexpr int kExactMatchingMaxEdges = 24;

struct BipartiteMatching {
  std::vector<std::pair<int, int>> pairs;  // (row, column), rows ascending
  double value = 0.0;
};

// Maximum-weight (not necessarily perfect) matching of a dense nonnegative
// matrix. Pairs of weight zero are dropped.
BipartiteMatching hungarian_bipartite(const Eigen::MatrixXd& w);

// Complete bipartite graph with rows 0..r-1, columns r..r+c-1 and edge id
// i*c + j for cell (i, j).
WeightedGraph complete_bipartite(const Eigen::MatrixXd& w);

}  // namespace lipgraph
