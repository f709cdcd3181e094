// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "lipgraph/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lipgraph/contraction.hpp"
#include "lipgraph/contraction_sp.hpp"
#include "lipgraph/errors.hpp"
#include "lipgraph/lip_mst.hpp"
#include "lipgraph/lip_mwm.hpp"
#include "lipgraph/lip_sp.hpp"
#include "lipgraph/plip_mwbm.hpp"

namespace lipgraph {
namespace {

struct Shape {
  int rows, cols;
};

Shape bipartite_shape(const AlgorithmSpec& spec, const WeightedMultigraph& g) {
  const int r = spec.bipartite_rows;
  if (r <= 0 || g.num_edges() % r != 0)
    throw Error(ErrorCode::BadParams, "PlipMwbm needs bipartite_rows dividing the edge count");
  return {r, g.num_edges() / r};
}

Eigen::MatrixXd as_matrix(const WeightVector& w, Shape shape) {
  Eigen::MatrixXd m(shape.rows, shape.cols);
  for (int i = 0; i < shape.rows; ++i)
    for (int j = 0; j < shape.cols; ++j) m(i, j) = w[static_cast<std::size_t>(i) * shape.cols + j];
  return m;
}

EdgeMultiset matching_edges(const BipartiteMatching& m, Shape shape) {
  std::vector<EdgeId> ids;
  for (const auto& [i, j] : m.pairs) ids.push_back(i * shape.cols + j);
  return EdgeMultiset::from_edges(ids);
}

double mean_of(const std::vector<double>& v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double stddev_of(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double mu = mean_of(v);
  double ss = 0.0;
  for (double x : v) ss += (x - mu) * (x - mu);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

// Multinomial resample of an empirical law with the same sample size.
EdgeSetDistribution resample(const EdgeSetDistribution& dist, std::uint32_t n, const CounterRng& rng,
                             std::uint64_t entity) {
  const auto& outs = dist.outcomes();
  std::vector<double> cdf(outs.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < outs.size(); ++k) cdf[k] = acc += outs[k].probability;
  std::vector<std::uint32_t> counts(outs.size(), 0);
  DrawSequence draws(rng, Stream::Bootstrap, entity);
  for (std::uint32_t i = 0; i < n; ++i) {
    const double u = draws.uniform() * acc;
    const auto k = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    ++counts[std::min(k, outs.size() - 1)];
  }
  std::vector<WeightedOutcome> picked;
  for (std::size_t k = 0; k < outs.size(); ++k)
    if (counts[k] > 0) picked.push_back({outs[k].outcome, static_cast<double>(counts[k]) / n});
  return EdgeSetDistribution::from_outcomes(std::move(picked));
}

double distance(const EdgeMultiset& a, const WeightVector& w, const EdgeMultiset& b,
                const WeightVector& w2, Metric metric) {
  return metric == Metric::Weighted ? d_w(a, w, b, w2) : d_u(a, b);
}

// Shared tail: coupled pairs and two independent samples -> estimate.
LipschitzEstimate summarize(const std::vector<std::pair<EdgeMultiset, EdgeMultiset>>& coupled,
                            const std::vector<EdgeMultiset>& independent,
                            const std::vector<EdgeMultiset>& null_sample, const WeightVector& w,
                            const WeightVector& w2, Metric metric, double scale,
                            std::uint64_t seed, const EstimateOptions& options) {
  const auto n = static_cast<std::uint32_t>(coupled.size());
  LipschitzEstimate est;
  est.scale = scale;
  est.trials = n;

  std::vector<double> dist(n);
  std::vector<EdgeMultiset> base(n);
  for (std::uint32_t t = 0; t < n; ++t) {
    dist[t] = distance(coupled[t].first, w, coupled[t].second, w2, metric);
    base[t] = coupled[t].first;
  }
  est.coupled = mean_of(dist);
  est.coupled_stderr = n > 0 ? stddev_of(dist) / std::sqrt(static_cast<double>(n)) : 0.0;

  const auto p = EdgeSetDistribution::from_samples(base);
  const auto q = EdgeSetDistribution::from_samples(independent);
  est.support_base = p.size();
  est.support_shifted = q.size();
  const OutcomeCost cost = [&](const EdgeMultiset& a, const EdgeMultiset& b) {
    return distance(a, w, b, w2, metric);
  };
  est.emd = emd_empirical(p, q, cost);
  const OutcomeCost base_cost = [&](const EdgeMultiset& a, const EdgeMultiset& b) {
    return distance(a, w, b, w, metric);
  };
  est.emd_floor = emd_empirical(p, EdgeSetDistribution::from_samples(null_sample), base_cost);

  const auto reps = run_trials(options.bootstrap, options.execution, [&](std::uint32_t r) {
    const CounterRng rng(seed, r);
    return emd_empirical(resample(p, n, rng, 0), resample(q, n, rng, 1), cost);
  });
  est.emd_stderr = stddev_of(reps);
  return est;
}

void check_trials(std::uint32_t trials) {
  if (trials == 0 || trials > (1u << 30)) throw Error(ErrorCode::BadParams, "trials must be in [1, 2^30]");
}

}  // namespace

const char* to_string(AlgorithmKind kind) {
  switch (kind) {
    case AlgorithmKind::LipMst: return "lip-mst";
    case AlgorithmKind::PlipMst: return "plip-mst";
    case AlgorithmKind::LipSp: return "lip-sp";
    case AlgorithmKind::Sp: return "sp-unweighted";
    case AlgorithmKind::LipMwm: return "lip-mwm";
    case AlgorithmKind::PlipMwbm: return "plip-mwbm";
  }
  return "?";
}

AlgorithmKind parse_algorithm(const std::string& name) {
  for (auto k : {AlgorithmKind::LipMst, AlgorithmKind::PlipMst, AlgorithmKind::LipSp,
                 AlgorithmKind::Sp, AlgorithmKind::LipMwm, AlgorithmKind::PlipMwbm})
    if (name == to_string(k)) return k;
  throw Error(ErrorCode::BadParams, "unknown algorithm '" + name + "'");
}

bool LipschitzEstimate::consistent(double sigmas) const {
  const double noise = std::hypot(coupled_stderr, emd_stderr);
  return coupled + sigmas * noise + emd_floor + 1e-12 >= emd;
}

EdgeMultiset run_algorithm(const AlgorithmSpec& spec, const WeightedMultigraph& g,
                           const WeightVector& w, const CounterRng& rng) {
  switch (spec.kind) {
    case AlgorithmKind::LipMst:
      return EdgeMultiset::from_edges(lip_mst(g, w, spec.epsilon, rng).tree.edges);
    case AlgorithmKind::PlipMst:
      return EdgeMultiset::from_edges(plip_mst(g, w, spec.epsilon, rng).tree.edges);
    case AlgorithmKind::LipSp:
      return EdgeMultiset::from_walk(lip_sp(g, w, spec.source, spec.target, spec.epsilon, rng));
    case AlgorithmKind::Sp:
      return EdgeMultiset::from_walk(
          sp(g, spec.source, spec.target, spec.epsilon, rng, spec.gamma_override));
    case AlgorithmKind::LipMwm:
      return EdgeMultiset::from_edges(lip_mwm(g, w, spec.effective_alpha(), rng).edges);
    case AlgorithmKind::PlipMwbm: {
      const Shape shape = bipartite_shape(spec, g);
      const auto res = plip_mwbm(as_matrix(w, shape), spec.epsilon, rng);
      return matching_edges(res.transcript.matching, shape);
    }
  }
  throw Error(ErrorCode::BadParams, "unknown algorithm");
}

std::pair<EdgeMultiset, EdgeMultiset> run_coupled(const AlgorithmSpec& spec,
                                                  const WeightedMultigraph& g,
                                                  const WeightVector& w, EdgeId f, double delta,
                                                  const CounterRng& rng) {
  switch (spec.kind) {
    case AlgorithmKind::LipMst: {
      const auto c = lip_mst_coupled(g, w, f, delta, spec.epsilon, rng);
      return {EdgeMultiset::from_edges(c.base.tree.edges),
              EdgeMultiset::from_edges(c.shifted.tree.edges)};
    }
    case AlgorithmKind::PlipMst: {
      const auto c = plip_mst_coupled(g, w, f, delta, spec.epsilon, rng);
      return {EdgeMultiset::from_edges(c.base.tree.edges),
              EdgeMultiset::from_edges(c.shifted.tree.edges)};
    }
    case AlgorithmKind::LipSp: {
      const auto c = lip_sp_coupled(g, w, spec.source, spec.target, f, delta, spec.epsilon, rng);
      return {EdgeMultiset::from_walk(c.base), EdgeMultiset::from_walk(c.shifted)};
    }
    case AlgorithmKind::PlipMwbm: {
      const Shape shape = bipartite_shape(spec, g);
      if (!g.valid_edge(f)) throw Error(ErrorCode::InvalidEdge, "perturbed edge out of range");
      const auto c = plip_mwbm_coupled(as_matrix(w, shape), f / shape.cols, f % shape.cols, delta,
                                       spec.epsilon, rng);
      return {matching_edges(c.base.transcript.matching, shape),
              matching_edges(c.shifted.transcript.matching, shape)};
    }
    case AlgorithmKind::Sp:
    case AlgorithmKind::LipMwm: {
      // Sp ignores weights; LipMwm has no per-edge draws to couple beyond sharing.
      const WeightVector w2 = shifted_weights(w, f, delta);
      return {run_algorithm(spec, g, w, rng), run_algorithm(spec, g, w2, rng)};
    }
  }
  throw Error(ErrorCode::BadParams, "unknown algorithm");
}

LipschitzEstimate estimate_lipschitz(const AlgorithmSpec& spec, const WeightedMultigraph& g,
                                     const WeightVector& w, EdgeId f, double delta,
                                     std::uint32_t trials, std::uint64_t seed, Metric metric,
                                     const EstimateOptions& options) {
  check_trials(trials);
  if (!(delta > 0.0)) throw Error(ErrorCode::BadParams, "delta must be positive");
  const WeightVector w2 = shifted_weights(w, f, delta);
  const auto coupled = run_trials(trials, options.execution, [&](std::uint32_t t) {
    return run_coupled(spec, g, w, f, delta, CounterRng(seed, t));
  });
  const auto independent = run_trials(trials, options.execution, [&](std::uint32_t t) {
    return run_algorithm(spec, g, w2, CounterRng(seed, trials + t));
  });
  const auto null_sample = run_trials(trials, options.execution, [&](std::uint32_t t) {
    return run_algorithm(spec, g, w, CounterRng(seed, 2 * trials + t));
  });
  return summarize(coupled, independent, null_sample, w, w2, metric, delta, seed ^ 0xb0075742ULL, options);
}

LipschitzEstimate estimate_lipschitz_between(const AlgorithmSpec& spec,
                                             const WeightedMultigraph& g, const WeightVector& w,
                                             const WeightVector& w2, std::uint32_t trials,
                                             std::uint64_t seed, Metric metric,
                                             const EstimateOptions& options) {
  check_trials(trials);
  validate_weights(g, w);
  validate_weights(g, w2);
  double scale = 0.0;
  for (std::size_t e = 0; e < w.size(); ++e) scale += std::abs(w[e] - w2[e]);
  if (!(scale > 0.0)) throw Error(ErrorCode::BadParams, "weight vectors coincide");
  const auto coupled = run_trials(trials, options.execution, [&](std::uint32_t t) {
    const CounterRng rng(seed, t);
    return std::pair{run_algorithm(spec, g, w, rng), run_algorithm(spec, g, w2, rng)};
  });
  const auto independent = run_trials(trials, options.execution, [&](std::uint32_t t) {
    return run_algorithm(spec, g, w2, CounterRng(seed, trials + t));
  });
  const auto null_sample = run_trials(trials, options.execution, [&](std::uint32_t t) {
    return run_algorithm(spec, g, w, CounterRng(seed, 2 * trials + t));
  });
  return summarize(coupled, independent, null_sample, w, w2, metric, scale, seed ^ 0xb0075742ULL, options);
}

LipschitzEstimate estimate_contraction_sensitivity(const WeightedMultigraph& g, Vertex s, Vertex t,
                                                   double epsilon, EdgeId e,
                                                   std::optional<double> gamma_override,
                                                   std::uint32_t trials, std::uint64_t seed,
                                                   const EstimateOptions& options) {
  check_trials(trials);
  if (!g.valid_edge(e)) throw Error(ErrorCode::InvalidEdge, "contracted edge out of range");
  if (!g.valid_vertex(s) || !g.valid_vertex(t)) throw Error(ErrorCode::BadParams, "bad terminals");
  const Edge ends = g.edge(e);
  if (ends.u == s || ends.v == s || ends.u == t || ends.v == t)
    throw Error(ErrorCode::InvalidEdge, "contracted edge touches a terminal");
  const ContractedGraph c = contract_edge(g, e);
  const Vertex cs = c.vertex_map[s], ct = c.vertex_map[t];

  auto contracted_run = [&](const CounterRng& rng) {
    return EdgeMultiset::from_edges(
        original_edges(c, sp(c.graph, cs, ct, epsilon, rng, gamma_override)));
  };
  const auto coupled = run_trials(trials, options.execution, [&](std::uint32_t k) {
    const CounterRng rng(seed, k);
    return std::pair{EdgeMultiset::from_walk(sp(g, s, t, epsilon, rng, gamma_override)),
                     contracted_run(rng)};
  });
  const auto independent = run_trials(trials, options.execution, [&](std::uint32_t k) {
    return contracted_run(CounterRng(seed, trials + k));
  });
  const auto null_sample = run_trials(trials, options.execution, [&](std::uint32_t k) {
    return EdgeMultiset::from_walk(sp(g, s, t, epsilon, CounterRng(seed, 2 * trials + k), gamma_override));
  });
  const WeightVector unit(static_cast<std::size_t>(g.num_edges()), 1.0);
  return summarize(coupled, independent, null_sample, unit, unit, Metric::Unweighted, 1.0,
                   seed ^ 0xb0075742ULL, options);
}

}  // namespace lipgraph
