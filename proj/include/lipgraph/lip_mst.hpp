// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "lipgraph/graph.hpp"
#include "lipgraph/rng.hpp"

namespace lipgraph {

struct LipMstResult {
  SpanningTree tree;
  WeightVector perturbed;  // the sampled ŵ, kept for audit
};

// Kruskal on ŵ(e) ~ Unif[w(e), (1+ε)w(e)]. Throws DisconnectedGraph.
LipMstResult lip_mst(const WeightedMultigraph& g, const WeightVector& w, double epsilon,
                     const CounterRng& rng);

struct PlipMstResult {
  SpanningTree tree;
  double scale = 0.0;  // b
  WeightVector perturbed;
  bool zero_optimum = false;  // opt = 0: exact MST returned, no draws used
};

// Kruskal on ŵ(e) ~ Unif[w(e), w(e)+b], b ~ Unif[εopt/(2(n-1)), εopt/(n-1)].
PlipMstResult plip_mst(const WeightedMultigraph& g, const WeightVector& w, double epsilon,
                       const CounterRng& rng);

// Paired runs on w and w + δ·1_f. Every draw is shared; ŵ(f) (and b for the
// pointwise variant) use a maximal coupling, so `split` happens with exactly
// the total variation distance of the two coordinate laws.
struct CoupledMst {
  LipMstResult base;
  LipMstResult shifted;
  bool split = false;
};
CoupledMst lip_mst_coupled(const WeightedMultigraph& g, const WeightVector& w, EdgeId f,
                           double delta, double epsilon, const CounterRng& rng);

struct CoupledPlipMst {
  PlipMstResult base;
  PlipMstResult shifted;
  bool scale_split = false;
  bool weight_split = false;
};
CoupledPlipMst plip_mst_coupled(const WeightedMultigraph& g, const WeightVector& w, EdgeId f,
                                double delta, double epsilon, const CounterRng& rng);

// w + δ·1_f; throws BadParams if the result leaves the nonnegative orthant.
WeightVector shifted_weights(const WeightVector& w, EdgeId f, double delta);

}  // namespace lipgraph
