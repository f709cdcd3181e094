// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lipgraph/estimators.hpp"
#include "lipgraph/generators.hpp"

namespace lipgraph {

inline constexpr const char* kCsvHeaderComment = "# lipgraph-experiment-csv v1";

struct ExperimentConfig {
  AlgorithmSpec algorithm;  // epsilon/alpha are overwritten per grid point
  std::string instance_label;
  Instance instance;
  std::vector<double> epsilons;
  std::vector<double> alphas;   // LipMwm only; when set, replaces the ε grid
  std::vector<double> deltas;   // empty: approximation columns only
  std::vector<EdgeId> perturb_edges = {0};
  std::optional<EdgeId> contract_edge;  // sp-unweighted: contraction rows instead of δ rows
  std::uint32_t trials = 1000;
  std::uint64_t seed = 1;
  Metric metric = Metric::Weighted;
  bool timing = false;  // adds a wall_seconds column; output is no longer reproducible
  std::uint32_t bootstrap = 16;
};

struct ExperimentOutcome {
  std::string csv;
  std::vector<std::string> violations;  // invariant failures, one message each
};

// One CSV row per (ε or α) × (δ or contraction) × perturbed edge. Deterministic
// in the config unless timing is on; the execution mode does not change output.
ExperimentOutcome run_experiment(const ExperimentConfig& config,
                                 Execution execution = Execution::Parallel);

}  // namespace lipgraph
