// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

namespace lipgraph {

struct TransportFlow {
  int from;
  int to;
  double amount;
};

struct TransportPlan {
  double cost = 0.0;
  std::vector<TransportFlow> flows;  // basic cells, degenerate zeros included
  long pivots = 0;
};

// Balanced transportation problem by the primal simplex on the spanning-tree
// basis (MODI potentials). Start: north-west corner. Entering cell: most
// negative reduced cost, lowest row-major index on ties; after a run of
// degenerate pivots the rule switches to Bland's to rule out cycling.
// Demand is rescaled to the supply total before solving.
TransportPlan solve_transportation(std::span<const double> supply, std::span<const double> demand,
                                   const Eigen::MatrixXd& cost);

}  // namespace lipgraph
