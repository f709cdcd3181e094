// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lipgraph/graph.hpp"
#include "lipgraph/rng.hpp"

namespace lipgraph {

// Randomness of one matching run: the class offset b ∈ [1, α] and a vertex
// permutation given as ranks.
struct MwmDraws {
  double offset = 1.0;
  std::vector<std::int32_t> rank;  // rank[v] = position of v in π
};

MwmDraws sample_mwm_draws(int n, double alpha, const CounterRng& rng);

// The unique i with b·αⁱ <= w < b·α^{i+1}; nullopt for w = 0.
std::optional<std::int64_t> weight_level(double w, double b, double alpha);

// Level -> edges whose level is exactly that level (E_i \ E_{i+1}), edge ids
// ascending. E_i is the union of all levels >= i.
std::map<std::int64_t, std::vector<EdgeId>> class_partition(const WeightVector& w, double b,
                                                            double alpha);

// Greedy over E_i for every nonempty level i, highest first. Edges are
// scanned by (lower π-rank of the endpoints, higher π-rank, edge id).
Matching lip_mwm_with(const WeightedMultigraph& g, const WeightVector& w, double alpha,
                      const MwmDraws& draws);
Matching lip_mwm(const WeightedMultigraph& g, const WeightVector& w, double alpha,
                 const CounterRng& rng);
// α = 2 + ε, ε ∈ (0, 1/8).
Matching lip_mwm_eps(const WeightedMultigraph& g, const WeightVector& w, double epsilon,
                     const CounterRng& rng);

}  // namespace lipgraph
