// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "lipgraph/experiment.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <limits>

#include "lipgraph/algorithms.hpp"
#include "lipgraph/errors.hpp"

namespace lipgraph {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Labels go into a comma-separated file unquoted.
std::string csv_field(std::string text) {
  for (char& c : text)
    if (c == ',' || c == '\n' || c == '"') c = ';';
  return text;
}

std::string num(double x) {
  if (std::isnan(x)) return "";
  return fmt::format("{:.10g}", x);
}

double optimum(const AlgorithmSpec& spec, const Instance& inst) {
  const auto& g = inst.graph;
  const auto& w = inst.weights;
  switch (spec.kind) {
    case AlgorithmKind::LipMst:
    case AlgorithmKind::PlipMst:
      return total_weight(kruskal_mst(g, w).edges, w);
    case AlgorithmKind::LipSp: {
      const double d = dijkstra(g, w, spec.source).dist[spec.target];
      if (std::isinf(d)) throw Error(ErrorCode::Unreachable, "target unreachable");
      return d;
    }
    case AlgorithmKind::Sp: {
      const auto d = bfs_dist(g, spec.source)[spec.target];
      if (d == kUnreachable) throw Error(ErrorCode::Unreachable, "target unreachable");
      return static_cast<double>(d);
    }
    case AlgorithmKind::LipMwm:
      if (g.num_edges() <= kExactMatchingMaxEdges)
        return total_weight(exact_max_weight_matching(g, w).edges, w);
      if (inst.matrix) return hungarian_bipartite(*inst.matrix).value;
      return kNaN;
    case AlgorithmKind::PlipMwbm: {
      const int r = spec.bipartite_rows;
      Eigen::MatrixXd m(r, g.num_edges() / r);
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = w[static_cast<std::size_t>(i) * m.cols() + j];
      return hungarian_bipartite(m).value;
    }
  }
  return kNaN;
}

double value_of(const AlgorithmSpec& spec, const EdgeMultiset& out, const WeightVector& w) {
  double v = 0.0;
  for (const auto& [e, mult] : out.entries())
    v += mult * (spec.kind == AlgorithmKind::Sp ? 1.0 : w[e]);
  return v;
}

// Largest value a single run may return, or NaN when only the mean is bounded.
double per_sample_cap(const AlgorithmSpec& spec, double opt) {
  switch (spec.kind) {
    case AlgorithmKind::LipMst:
    case AlgorithmKind::PlipMst:
    case AlgorithmKind::LipSp:
      return (1.0 + spec.epsilon) * opt * (1.0 + 1e-9) + 1e-12;
    case AlgorithmKind::Sp:
      if (spec.gamma_override) return std::pow(opt, 1.0 + 14.0 * *spec.gamma_override) + 1e-9;
      return (1.0 + spec.epsilon) * opt + 1e-9;
    default:
      return kNaN;
  }
}

// Lower bound on the expected ratio for the matching algorithms.
double mean_ratio_floor(const AlgorithmSpec& spec) {
  if (spec.kind == AlgorithmKind::LipMwm) return 1.0 / (4.0 * spec.effective_alpha());
  if (spec.kind == AlgorithmKind::PlipMwbm) return 0.5 - spec.epsilon;
  return kNaN;
}

struct ApproxStats {
  double opt = 0.0, mean = 0.0, stderr_ = 0.0, min = 0.0, max = 0.0;
  long violations = 0;
};

ApproxStats approximation(const AlgorithmSpec& spec, const Instance& inst, std::uint32_t trials,
                          std::uint64_t seed, Execution exec) {
  ApproxStats st;
  st.opt = optimum(spec, inst);
  const auto values = run_trials(trials, exec, [&](std::uint32_t t) {
    return value_of(spec, run_algorithm(spec, inst.graph, inst.weights, CounterRng(seed, t)),
                    inst.weights);
  });
  const double cap = per_sample_cap(spec, st.opt);
  std::vector<double> ratios;
  ratios.reserve(values.size());
  for (double v : values) {
    if (!std::isnan(cap) && v > cap) ++st.violations;
    if (st.opt > 0.0) ratios.push_back(v / st.opt);
    else ratios.push_back(v == 0.0 ? 1.0 : std::numeric_limits<double>::infinity());
  }
  if (std::isnan(st.opt)) ratios.clear();
  if (ratios.empty()) {
    st.mean = st.stderr_ = st.min = st.max = kNaN;
    return st;
  }
  double sum = 0.0, ss = 0.0;
  st.min = st.max = ratios.front();
  for (double r : ratios) {
    sum += r;
    st.min = std::min(st.min, r);
    st.max = std::max(st.max, r);
  }
  st.mean = sum / static_cast<double>(ratios.size());
  for (double r : ratios) ss += (r - st.mean) * (r - st.mean);
  st.stderr_ = ratios.size() > 1
                   ? std::sqrt(ss / static_cast<double>(ratios.size() - 1) / static_cast<double>(ratios.size()))
                   : 0.0;
  return st;
}

}  // namespace

ExperimentOutcome run_experiment(const ExperimentConfig& cfg, Execution execution) {
  ExperimentOutcome out;
  std::string& csv = out.csv;
  csv += kCsvHeaderComment;
  csv += '\n';
  csv +=
      "algorithm,instance,n,m,epsilon,alpha,gamma_override,perturbation,delta,edge,trials,seed,"
      "opt,mean_ratio,ratio_stderr,min_ratio,max_ratio,sample_violations,coupled_ratio,"
      "coupled_stderr,emd_ratio,emd_stderr,emd_floor,support_base,support_shifted";
  if (cfg.timing) csv += ",wall_seconds";
  csv += '\n';

  const bool by_alpha = cfg.algorithm.kind == AlgorithmKind::LipMwm && !cfg.alphas.empty();
  const auto& grid = by_alpha ? cfg.alphas : cfg.epsilons;
  const EstimateOptions est_opts{execution, cfg.bootstrap};
  const auto& inst = cfg.instance;

  for (double param : grid) {
    AlgorithmSpec spec = cfg.algorithm;
    if (by_alpha) {
      spec.alpha = param;
    } else {
      spec.epsilon = param;
      if (spec.kind == AlgorithmKind::LipMwm) spec.alpha = 0.0;
    }
    const auto started = std::chrono::steady_clock::now();
    const ApproxStats st = approximation(spec, inst, cfg.trials, cfg.seed, execution);
    const double approx_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    const std::string eps_text = by_alpha ? "" : num(spec.epsilon);
    const std::string alpha_text =
        spec.kind == AlgorithmKind::LipMwm ? num(spec.effective_alpha()) : "";
    const std::string gamma_text = spec.gamma_override ? num(*spec.gamma_override) : "";

    if (st.violations > 0)
      out.violations.push_back(fmt::format("{} at parameter {}: {} of {} runs exceed the per-run bound",
                                           to_string(spec.kind), param, st.violations, cfg.trials));
    const double floor = mean_ratio_floor(spec);
    if (!std::isnan(floor) && !std::isnan(st.mean) && st.mean + 3.0 * st.stderr_ < floor)
      out.violations.push_back(fmt::format("{} at parameter {}: mean ratio {} below {}",
                                           to_string(spec.kind), param, st.mean, floor));

    auto emit = [&](const std::string& kind, const std::string& delta, const std::string& edge,
                    const LipschitzEstimate* est, double seconds) {
      csv += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}", to_string(spec.kind),
                         csv_field(cfg.instance_label), inst.graph.num_vertices(), inst.graph.num_edges(),
                         eps_text, alpha_text, gamma_text, kind, delta, edge, cfg.trials, cfg.seed,
                         num(st.opt), num(st.mean), num(st.stderr_), num(st.min), num(st.max),
                         st.violations);
      if (est) {
        csv += fmt::format(",{},{},{},{},{},{},{}", num(est->coupled_ratio()),
                           num(est->coupled_ratio_stderr()), num(est->emd_ratio()),
                           num(est->emd_ratio_stderr()), num(est->emd_ratio_floor()),
                           est->support_base, est->support_shifted);
      } else {
        csv += ",,,,,,,";
      }
      if (cfg.timing) csv += "," + num(seconds);
      csv += '\n';
    };

    auto check = [&](const LipschitzEstimate& est, const std::string& where) {
      if (!est.consistent())
        out.violations.push_back(fmt::format("{} {}: coupled cost {} below transport estimate {}",
                                             to_string(spec.kind), where, est.coupled, est.emd));
    };

    if (cfg.contract_edge) {
      if (spec.kind != AlgorithmKind::Sp)
        throw Error(ErrorCode::BadParams, "contraction rows need sp-unweighted");
      const auto t0 = std::chrono::steady_clock::now();
      const auto est = estimate_contraction_sensitivity(inst.graph, spec.source, spec.target,
                                                        spec.epsilon, *cfg.contract_edge,
                                                        spec.gamma_override, cfg.trials, cfg.seed,
                                                        est_opts);
      check(est, fmt::format("contracting edge {}", *cfg.contract_edge));
      emit("contract", "", std::to_string(*cfg.contract_edge), &est,
           approx_seconds + std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    } else if (cfg.deltas.empty()) {
      emit("none", "", "", nullptr, approx_seconds);
    } else {
      for (double delta : cfg.deltas) {
        for (EdgeId f : cfg.perturb_edges) {
          const auto t0 = std::chrono::steady_clock::now();
          const auto est = estimate_lipschitz(spec, inst.graph, inst.weights, f, delta, cfg.trials,
                                              cfg.seed, cfg.metric, est_opts);
          check(est, fmt::format("delta {} edge {}", delta, f));
          emit("delta", num(delta), std::to_string(f), &est,
               approx_seconds +
                   std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
        }
      }
    }
  }
  return out;
}

}  // namespace lipgraph
