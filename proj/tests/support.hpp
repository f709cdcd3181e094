// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

// Instance builders and small statistics shared by the unit and acceptance
// tests. Test instances come from std::mt19937_64 so they never share draws
// with the library's counter streams.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "lipgraph/graph.hpp"

namespace lipgraph::testing {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Random spanning tree plus `extra` distinct non-tree pairs; simple graph.
inline WeightedMultigraph random_connected(Rng& rng, int n, int extra) {
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> used;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    const int u = order[i], v = order[uniform_int(rng, 0, i - 1)];
    edges.push_back({u, v});
    used.insert({std::min(u, v), std::max(u, v)});
  }
  const int max_pairs = n * (n - 1) / 2;
  extra = std::min(extra, max_pairs - (n - 1));
  while (extra > 0) {
    const int u = uniform_int(rng, 0, n - 1), v = uniform_int(rng, 0, n - 1);
    if (u == v || !used.insert({std::min(u, v), std::max(u, v)}).second) continue;
    edges.push_back({u, v});
    --extra;
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return WeightedMultigraph(n, edges);
}

inline WeightVector integer_weights(Rng& rng, int m, int lo, int hi) {
  WeightVector w(m);
  for (auto& x : w) x = uniform_int(rng, lo, hi);
  return w;
}

inline WeightVector real_weights(Rng& rng, int m, double lo, double hi) {
  WeightVector w(m);
  for (auto& x : w) x = uniform_real(rng, lo, hi);
  return w;
}

inline Eigen::MatrixXd random_matrix(Rng& rng, int rows, int cols, double hi = 1.0) {
  Eigen::MatrixXd w(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) w(i, j) = uniform_real(rng, 0.0, hi);
  return w;
}

// Upper tail of the χ² law.
inline double chi_squared_p_value(double statistic, double dof) {
  if (dof <= 0) return 1.0;
  return boost::math::cdf(boost::math::complement(boost::math::chi_squared(dof), statistic));
}

struct MeanAndError {
  double mean = 0.0;
  double stderr_ = 0.0;
};

inline MeanAndError mean_and_error(const std::vector<double>& v) {
  MeanAndError out;
  if (v.empty()) return out;
  for (double x : v) out.mean += x;
  out.mean /= static_cast<double>(v.size());
  if (v.size() < 2) return out;
  double ss = 0.0;
  for (double x : v) ss += (x - out.mean) * (x - out.mean);
  out.stderr_ = std::sqrt(ss / static_cast<double>(v.size() - 1) / static_cast<double>(v.size()));
  return out;
}

}  // namespace lipgraph::testing
