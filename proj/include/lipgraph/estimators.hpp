// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "lipgraph/graph.hpp"
#include "lipgraph/metrics.hpp"
#include "lipgraph/rng.hpp"
#include "lipgraph/trials.hpp"

namespace lipgraph {

enum class AlgorithmKind { LipMst, PlipMst, LipSp, Sp, LipMwm, PlipMwbm };

const char* to_string(AlgorithmKind kind);
AlgorithmKind parse_algorithm(const std::string& name);  // throws BadParams

struct AlgorithmSpec {
  AlgorithmKind kind = AlgorithmKind::LipMst;
  double epsilon = 0.1;
  double alpha = 0.0;  // LipMwm; 0 selects 2 + epsilon
  Vertex source = 0;
  Vertex target = 0;
  std::optional<double> gamma_override;  // Sp only
  int bipartite_rows = 0;  // PlipMwbm: edge id i*cols + j is cell (i, j)

  double effective_alpha() const { return alpha > 0.0 ? alpha : 2.0 + epsilon; }
};

enum class Metric { Weighted, Unweighted };

// One run as an edge multiset; PlipMwbm reports matched cells as edge ids.
EdgeMultiset run_algorithm(const AlgorithmSpec& spec, const WeightedMultigraph& g,
                           const WeightVector& w, const CounterRng& rng);

// Paired runs on w and w + δ·1_f sharing randomness, with the maximal
// couplings each algorithm supports.
std::pair<EdgeMultiset, EdgeMultiset> run_coupled(const AlgorithmSpec& spec,
                                                  const WeightedMultigraph& g,
                                                  const WeightVector& w, EdgeId f, double delta,
                                                  const CounterRng& rng);

struct EstimateOptions {
  Execution execution = Execution::Parallel;
  std::uint32_t bootstrap = 16;  // replicates for the EMD standard error
};

// Both estimates are distances; divide by `scale` for ratios.
struct LipschitzEstimate {
  double scale = 1.0;  // δ, ‖w - w'‖₁, or 1 for contraction
  double coupled = 0.0;
  double coupled_stderr = 0.0;
  double emd = 0.0;
  double emd_stderr = 0.0;
  // EMD between two independent samples of the base law: the upward bias of
  // the empirical EMD at this sample size.
  double emd_floor = 0.0;
  std::uint32_t trials = 0;
  std::size_t support_base = 0;
  std::size_t support_shifted = 0;

  double coupled_ratio() const { return coupled / scale; }
  double emd_ratio() const { return emd / scale; }
  double coupled_ratio_stderr() const { return coupled_stderr / scale; }
  double emd_ratio_stderr() const { return emd_stderr / scale; }
  double emd_ratio_floor() const { return emd_floor / scale; }
  // Coupling cost upper-bounds the optimal transport cost up to noise and
  // the empirical bias.
  bool consistent(double sigmas = 3.0) const;
};

// Trial lanes: base runs and coupled pairs use lanes [0, N); the independent
// perturbed sample for the EMD estimate uses lanes [N, 2N) and the second
// base sample for the bias floor uses [2N, 3N).
LipschitzEstimate estimate_lipschitz(const AlgorithmSpec& spec, const WeightedMultigraph& g,
                                     const WeightVector& w, EdgeId f, double delta,
                                     std::uint32_t trials, std::uint64_t seed, Metric metric,
                                     const EstimateOptions& options = {});

// Arbitrary pair of weight vectors; the coupling is shared randomness only.
LipschitzEstimate estimate_lipschitz_between(const AlgorithmSpec& spec,
                                             const WeightedMultigraph& g, const WeightVector& w,
                                             const WeightVector& w2, std::uint32_t trials,
                                             std::uint64_t seed, Metric metric,
                                             const EstimateOptions& options = {});

// d_u transport cost between sp on G and on G/e, walks on G/e translated to
// original edge ids. Throws InvalidEdge when e touches s or t.
LipschitzEstimate estimate_contraction_sensitivity(const WeightedMultigraph& g, Vertex s, Vertex t,
                                                   double epsilon, EdgeId e,
                                                   std::optional<double> gamma_override,
                                                   std::uint32_t trials, std::uint64_t seed,
                                                   const EstimateOptions& options = {});

}  // namespace lipgraph
