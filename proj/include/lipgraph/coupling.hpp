// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>

namespace lipgraph {

// Maximal couplings built from caller-supplied uniforms. In every helper the
// first coordinate is computed from `u` alone, exactly as an uncoupled draw
// would be, so the first run of a coupled pair is bit-identical to a plain run.

struct CoupledReal {
  double first;
  double second;
  bool equal;
};

// Unif[a1,b1] against Unif[a2,b2]; Pr[first != second] equals their total
// variation distance. Degenerate intervals are point masses.
CoupledReal couple_uniform_intervals(double a1, double b1, double a2, double b2, double u,
                                     double u_accept, double u_residual);

// Index of the first cumulative weight exceeding u; probs.size() when u lands
// past the total mass (the implicit remainder outcome).
std::size_t inverse_cdf(std::span<const double> probs, double u);

struct CoupledIndex {
  std::size_t first;
  std::size_t second;
};

// Two sub-probability vectors of equal length; index probs.size() stands for
// the remainder outcome of each.
CoupledIndex couple_categorical(std::span<const double> p, std::span<const double> q, double u,
                                double u_accept, double u_residual);

}  // namespace lipgraph
