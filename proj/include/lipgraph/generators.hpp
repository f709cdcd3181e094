// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "lipgraph/graph.hpp"

namespace lipgraph {

// Generator kinds and their parameters (defaults in brackets):
//   random-gnm        n, m, wmin [1], wmax [9], integer [1]; connected, simple
//   path              k: k+1 vertices, k unit edges, s=0, t=k
//   cycle             k: k vertices, k unit edges, s=0, t=k/2
//   grid              rows, cols, unit weights, s=0, t=last
//   gadget-thm1       two s-t edges with weights (0, 1)
//   gadget-thm6       eps: two parallel edges with weights (1, 1 - 10 eps)
//   gadget-thm8       two parallel edges with weights (1, 0); alternate (0, 1)
//   bipartite-random  rows, cols, wmax [1]; uniform real weights
using GeneratorParams = std::map<std::string, double>;

struct Instance {
  std::string kind;
  WeightedMultigraph graph;
  WeightVector weights;
  std::optional<WeightVector> alternate;  // second weight vector for flip gadgets
  std::optional<Eigen::MatrixXd> matrix;  // bipartite kinds
  Vertex source = 0;
  Vertex target = 0;
};

// Deterministic in (kind, params, seed). Throws BadParams.
Instance gen_instance(const std::string& kind, const GeneratorParams& params, std::uint64_t seed);

// "key=value,key=value" -> params. Throws BadParams.
GeneratorParams parse_params(const std::string& text);

}  // namespace lipgraph
