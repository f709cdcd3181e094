// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "lipgraph/lip_mwm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lipgraph/errors.hpp"

namespace lipgraph {
namespace {

void check_alpha(double alpha) {
  if (!(alpha > 2.0) || !std::isfinite(alpha)) throw Error(ErrorCode::BadParams, "alpha must exceed 2");
}

}  // namespace

MwmDraws sample_mwm_draws(int n, double alpha, const CounterRng& rng) {
  check_alpha(alpha);
  MwmDraws d;
  d.offset = rng.uniform(Stream::MwmScale, 0, 0, 1.0, alpha);
  // π orders vertices by i.i.d. keys; ties (probability 2^-53) fall back to id.
  std::vector<double> key(n);
  for (Vertex v = 0; v < n; ++v) key[v] = rng.uniform(Stream::MwmPermutation, v);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](Vertex a, Vertex b) { return key[a] < key[b] || (key[a] == key[b] && a < b); });
  d.rank.resize(n);
  for (int p = 0; p < n; ++p) d.rank[order[p]] = p;
  return d;
}

std::optional<std::int64_t> weight_level(double w, double b, double alpha) {
  if (!(w > 0.0)) return std::nullopt;
  auto i = static_cast<std::int64_t>(std::floor(std::log(w / b) / std::log(alpha)));
  // Repair rounding so that b·αⁱ <= w < b·α^{i+1} holds as computed.
  while (b * std::pow(alpha, static_cast<double>(i)) > w) --i;
  while (b * std::pow(alpha, static_cast<double>(i + 1)) <= w) ++i;
  return i;
}

std::map<std::int64_t, std::vector<EdgeId>> class_partition(const WeightVector& w, double b,
                                                            double alpha) {
  check_alpha(alpha);
  if (!(b >= 1.0 && b <= alpha)) throw Error(ErrorCode::BadParams, "offset must lie in [1, alpha]");
  std::map<std::int64_t, std::vector<EdgeId>> levels;
  for (EdgeId e = 0; e < static_cast<EdgeId>(w.size()); ++e) {
    if (auto i = weight_level(w[e], b, alpha)) levels[*i].push_back(e);
  }
  return levels;
}

Matching lip_mwm_with(const WeightedMultigraph& g, const WeightVector& w, double alpha,
                      const MwmDraws& draws) {
  validate_weights(g, w);
  const auto levels = class_partition(w, draws.offset, alpha);

  std::vector<std::int64_t> level_of(g.num_edges(), 0);
  std::vector<EdgeId> order;
  for (const auto& [i, edges] : levels) {
    for (EdgeId e : edges) {
      if (g.is_self_loop(e)) continue;
      level_of[e] = i;
      order.push_back(e);
    }
  }
  auto key = [&](EdgeId e) {
    const auto ru = draws.rank[g.edge(e).u], rv = draws.rank[g.edge(e).v];
    return std::make_tuple(std::min(ru, rv), std::max(ru, rv), e);
  };
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return key(a) < key(b); });

  std::vector<bool> matched(g.num_vertices(), false);
  Matching m;
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    const std::int64_t i = it->first;
    for (EdgeId e : order) {
      if (level_of[e] < i) continue;
      const Edge ed = g.edge(e);
      if (matched[ed.u] || matched[ed.v]) continue;
      matched[ed.u] = matched[ed.v] = true;
      m.edges.push_back(e);
    }
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

Matching lip_mwm(const WeightedMultigraph& g, const WeightVector& w, double alpha,
                 const CounterRng& rng) {
  return lip_mwm_with(g, w, alpha, sample_mwm_draws(g.num_vertices(), alpha, rng));
}

Matching lip_mwm_eps(const WeightedMultigraph& g, const WeightVector& w, double epsilon,
                     const CounterRng& rng) {
  if (!(epsilon > 0.0 && epsilon < 0.125)) throw Error(ErrorCode::BadParams, "epsilon must lie in (0, 1/8)");
  return lip_mwm(g, w, 2.0 + epsilon, rng);
}

}  // namespace lipgraph
