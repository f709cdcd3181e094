// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>

#include "lipgraph/graph.hpp"

namespace lipgraph {

// Edge list: `n m` then m lines `u v w`, vertices 0-indexed.
WeightedGraph read_edge_list(std::istream& in);
WeightedGraph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const WeightedMultigraph& g, const WeightVector& w);

// Bipartite matrix: `nU nV` then nU rows of nV weights.
Eigen::MatrixXd read_bipartite(std::istream& in);
Eigen::MatrixXd read_bipartite_file(const std::string& path);
void write_bipartite(std::ostream& out, const Eigen::MatrixXd& w);

// `n m` then m lines `tail head`.
void write_arc_list(std::ostream& out, const DirectedGraph& g);

}  // namespace lipgraph
