// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "lipgraph/transport.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lipgraph/errors.hpp"

namespace lipgraph {
namespace {

struct Cell {
  int i;
  int j;
  double flow;
};

constexpr int kDegenerateRunBeforeBland = 50;

}  // namespace

TransportPlan solve_transportation(std::span<const double> supply, std::span<const double> demand,
                                   const Eigen::MatrixXd& cost) {
  const int m = static_cast<int>(supply.size());
  const int n = static_cast<int>(demand.size());
  if (m == 0 || n == 0) throw Error(ErrorCode::BadParams, "transportation needs both sides");
  if (cost.rows() != m || cost.cols() != n)
    throw Error(ErrorCode::BadParams, "cost matrix shape mismatch");
  const double total_s = std::accumulate(supply.begin(), supply.end(), 0.0);
  const double total_d = std::accumulate(demand.begin(), demand.end(), 0.0);
  if (!(total_s > 0.0) || !(total_d > 0.0))
    throw Error(ErrorCode::BadParams, "transportation needs positive mass");

  std::vector<double> a(supply.begin(), supply.end());
  std::vector<double> b(demand.size());
  for (int j = 0; j < n; ++j) b[j] = demand[j] * (total_s / total_d);

  // North-west corner: m + n - 1 cells along a staircase, which is a tree.
  std::vector<Cell> basis;
  basis.reserve(m + n - 1);
  for (int i = 0, j = 0;;) {
    const double f = std::max(0.0, std::min(a[i], b[j]));
    basis.push_back({i, j, f});
    a[i] -= f;
    b[j] -= f;
    if (i == m - 1 && j == n - 1) break;
    if (i == m - 1) {
      ++j;
    } else if (j == n - 1) {
      ++i;
    } else if (a[i] <= b[j]) {
      ++i;
    } else {
      ++j;
    }
  }

  const double scale = std::max(1.0, cost.cwiseAbs().maxCoeff());
  const double tol = 1e-12 * scale;
  const long max_pivots = 100L * (static_cast<long>(m) * n + m + n) + 1000;

  // Tree nodes: rows 0..m-1, columns m..m+n-1.
  const int nodes = m + n;
  std::vector<std::vector<int>> touching(nodes);
  std::vector<double> pot(nodes);
  std::vector<int> parent_cell(nodes), order;
  std::vector<bool> seen(nodes);
  auto rebuild = [&] {
    for (auto& t : touching) t.clear();
    for (int c = 0; c < static_cast<int>(basis.size()); ++c) {
      touching[basis[c].i].push_back(c);
      touching[m + basis[c].j].push_back(c);
    }
  };
  // BFS over the basis tree from `root`, filling parent_cell and `order`.
  auto walk_tree = [&](int root) {
    std::fill(seen.begin(), seen.end(), false);
    order.assign(1, root);
    seen[root] = true;
    parent_cell[root] = -1;
    for (std::size_t h = 0; h < order.size(); ++h) {
      const int x = order[h];
      for (int c : touching[x]) {
        const int y = x < m ? m + basis[c].j : basis[c].i;
        if (!seen[y]) {
          seen[y] = true;
          parent_cell[y] = c;
          order.push_back(y);
        }
      }
    }
  };

  TransportPlan plan;
  int degenerate_run = 0;
  for (;;) {
    rebuild();
    // Potentials: u_i + v_j = c_ij on basic cells, u_0 = 0.
    walk_tree(0);
    pot[0] = 0.0;
    for (std::size_t h = 1; h < order.size(); ++h) {
      const int y = order[h];
      const Cell& c = basis[parent_cell[y]];
      pot[y] = y < m ? cost(c.i, c.j) - pot[m + c.j] : cost(c.i, c.j) - pot[c.i];
    }

    const bool bland = degenerate_run >= kDegenerateRunBeforeBland;
    int ei = -1, ej = -1;
    double best = -tol;
    for (int i = 0; i < m && !(bland && ei >= 0); ++i) {
      for (int j = 0; j < n; ++j) {
        const double r = cost(i, j) - pot[i] - pot[m + j];
        if (r < best) {
          best = bland ? -tol : r;
          ei = i;
          ej = j;
          if (bland) break;
        }
      }
    }
    if (ei < 0) break;
    if (++plan.pivots > max_pivots)
      throw Error(ErrorCode::NoConvergence, "transportation simplex pivot limit reached");

    // Tree path from row ei to column ej; cells alternate -, +, -, ... from ei.
    walk_tree(ei);
    std::vector<int> cycle;
    for (int y = m + ej; y != ei;) {
      const int c = parent_cell[y];
      cycle.push_back(c);
      y = y < m ? m + basis[c].j : basis[c].i;
    }
    std::reverse(cycle.begin(), cycle.end());
    int leave = -1;
    for (std::size_t k = 0; k < cycle.size(); k += 2) {
      const Cell& c = basis[cycle[k]];
      if (leave < 0 || c.flow < basis[leave].flow ||
          (c.flow == basis[leave].flow &&
           c.i * n + c.j < basis[leave].i * n + basis[leave].j)) {
        leave = cycle[k];
      }
    }
    const double theta = basis[leave].flow;
    for (std::size_t k = 0; k < cycle.size(); ++k)
      basis[cycle[k]].flow += (k % 2 == 0) ? -theta : theta;
    basis[leave] = {ei, ej, theta};
    degenerate_run = theta > 0.0 ? 0 : degenerate_run + 1;
  }

  for (const Cell& c : basis) {
    const double f = std::max(0.0, c.flow);
    plan.flows.push_back({c.i, c.j, f});
    plan.cost += f * cost(c.i, c.j);
  }
  return plan;
}

}  // namespace lipgraph
