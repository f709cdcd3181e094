// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "lipgraph/lip_mst.hpp"

#include <cmath>

#include "lipgraph/algorithms.hpp"
#include "lipgraph/coupling.hpp"
#include "lipgraph/errors.hpp"

namespace lipgraph {
namespace {

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon))
    throw Error(ErrorCode::BadParams, "epsilon must be positive and finite");
}

struct ScaleInterval {
  double lo, hi;
};

ScaleInterval plip_scale_interval(const WeightedMultigraph& g, double opt, double epsilon) {
  const double top = epsilon * opt / (g.num_vertices() - 1);
  return {0.5 * top, top};
}

}  // namespace

WeightVector shifted_weights(const WeightVector& w, EdgeId f, double delta) {
  if (f < 0 || f >= static_cast<EdgeId>(w.size()))
    throw Error(ErrorCode::InvalidEdge, "perturbed edge out of range");
  WeightVector out = w;
  out[f] += delta;
  if (!(out[f] >= 0.0) || !std::isfinite(out[f]))
    throw Error(ErrorCode::BadParams, "perturbation leaves the nonnegative orthant");
  return out;
}

LipMstResult lip_mst(const WeightedMultigraph& g, const WeightVector& w, double epsilon,
                     const CounterRng& rng) {
  check_epsilon(epsilon);
  validate_weights(g, w);
  LipMstResult out;
  out.perturbed.resize(w.size());
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    out.perturbed[e] = w[e] * (1.0 + epsilon * rng.uniform(Stream::MstWeight, e));
  out.tree = kruskal_mst(g, out.perturbed);
  return out;
}

PlipMstResult plip_mst(const WeightedMultigraph& g, const WeightVector& w, double epsilon,
                       const CounterRng& rng) {
  check_epsilon(epsilon);
  validate_weights(g, w);
  PlipMstResult out;
  const SpanningTree exact = kruskal_mst(g, w);
  const double opt = total_weight(exact.edges, w);
  if (!(opt > 0.0)) {
    out.tree = exact;
    out.perturbed = w;
    out.zero_optimum = true;
    return out;
  }
  const ScaleInterval iv = plip_scale_interval(g, opt, epsilon);
  out.scale = rng.uniform(Stream::PlipMstScale, 0, 0, iv.lo, iv.hi);
  out.perturbed.resize(w.size());
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    out.perturbed[e] = w[e] + out.scale * rng.uniform(Stream::PlipMstWeight, e);
  out.tree = kruskal_mst(g, out.perturbed);
  return out;
}

CoupledMst lip_mst_coupled(const WeightedMultigraph& g, const WeightVector& w, EdgeId f,
                           double delta, double epsilon, const CounterRng& rng) {
  const WeightVector w2 = shifted_weights(w, f, delta);
  CoupledMst out;
  out.base = lip_mst(g, w, epsilon, rng);
  out.shifted.perturbed = out.base.perturbed;
  const CoupledReal c = couple_uniform_intervals(
      w[f], (1.0 + epsilon) * w[f], w2[f], (1.0 + epsilon) * w2[f],
      rng.uniform(Stream::MstWeight, f), rng.uniform(Stream::MstCoupling, f, 0),
      rng.uniform(Stream::MstCoupling, f, 1));
  out.shifted.perturbed[f] = c.second;
  out.split = !c.equal;
  out.shifted.tree = kruskal_mst(g, out.shifted.perturbed);
  return out;
}

CoupledPlipMst plip_mst_coupled(const WeightedMultigraph& g, const WeightVector& w, EdgeId f,
                                double delta, double epsilon, const CounterRng& rng) {
  const WeightVector w2 = shifted_weights(w, f, delta);
  CoupledPlipMst out;
  out.base = plip_mst(g, w, epsilon, rng);
  const double opt2 = total_weight(kruskal_mst(g, w2).edges, w2);
  if (out.base.zero_optimum || !(opt2 > 0.0)) {
    out.shifted = plip_mst(g, w2, epsilon, rng);
    out.scale_split = out.base.scale != out.shifted.scale;
    out.weight_split = true;
    return out;
  }
  const double opt = total_weight(kruskal_mst(g, w).edges, w);
  const ScaleInterval iv = plip_scale_interval(g, opt, epsilon);
  const ScaleInterval iv2 = plip_scale_interval(g, opt2, epsilon);
  const CoupledReal b = couple_uniform_intervals(
      iv.lo, iv.hi, iv2.lo, iv2.hi, rng.uniform(Stream::PlipMstScale, 0),
      rng.uniform(Stream::PlipMstCoupling, 0, 0), rng.uniform(Stream::PlipMstCoupling, 0, 1));
  out.scale_split = !b.equal;
  PlipMstResult& s = out.shifted;
  s.scale = b.second;
  s.perturbed.resize(w.size());
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    s.perturbed[e] = w2[e] + s.scale * rng.uniform(Stream::PlipMstWeight, e);
  if (b.equal) {
    const CoupledReal c = couple_uniform_intervals(
        w[f], w[f] + b.first, w2[f], w2[f] + b.second, rng.uniform(Stream::PlipMstWeight, f),
        rng.uniform(Stream::PlipMstCoupling, f + 1, 0),
        rng.uniform(Stream::PlipMstCoupling, f + 1, 1));
    s.perturbed[f] = c.second;
    out.weight_split = !c.equal;
  } else {
    out.weight_split = true;
  }
  s.tree = kruskal_mst(g, s.perturbed);
  return out;
}

}  // namespace lipgraph
