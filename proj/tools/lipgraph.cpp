// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

// lipgraph: command-line front end for the Lipschitz graph algorithms.
// Exit codes: 0 ok, 1 invariant violation (with --check) or solver failure,
// 2 bad input.

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "lipgraph/errors.hpp"
#include "lipgraph/experiment.hpp"
#include "lipgraph/generators.hpp"
#include "lipgraph/graph_io.hpp"
#include "lipgraph/lip_sp.hpp"
#include "lipgraph/plip_mwbm.hpp"

using namespace lipgraph;

namespace {

struct Globals {
  std::uint64_t seed = 1;
  std::uint32_t trials = 1000;
  std::string csv;
  bool check = false;
  bool quiet = false;
  bool serial = false;
};

// Instance source shared by every subcommand.
struct Source {
  std::string input;
  std::string gen;
  std::string params;
  std::optional<std::uint64_t> gen_seed;
};

void add_source(CLI::App* cmd, Source& src, bool bipartite) {
  cmd->add_option("--input", src.input,
                  bipartite ? "Matrix file: `rows cols` then rows of weights"
                            : "Edge list: `n m` then `u v w` per edge");
  cmd->add_option("--gen", src.gen, "Generator kind instead of --input");
  cmd->add_option("--params", src.params, "Generator parameters, key=value,...");
  cmd->add_option("--gen-seed", src.gen_seed, "Generator seed (defaults to --seed)");
}

Instance load(const Source& src, std::uint64_t seed, bool bipartite) {
  if (src.input.empty() == src.gen.empty())
    throw Error(ErrorCode::BadParams, "give exactly one of --input and --gen");
  if (!src.gen.empty()) return gen_instance(src.gen, parse_params(src.params), src.gen_seed.value_or(seed));
  Instance inst;
  inst.kind = "file";
  if (bipartite) {
    Eigen::MatrixXd m = read_bipartite_file(src.input);
    WeightedGraph bg = complete_bipartite(m);
    inst.graph = std::move(bg.graph);
    inst.weights = std::move(bg.weights);
    inst.matrix = std::move(m);
  } else {
    WeightedGraph wg = read_edge_list_file(src.input);
    inst.graph = std::move(wg.graph);
    inst.weights = std::move(wg.weights);
    inst.target = inst.graph.num_vertices() - 1;
  }
  return inst;
}

std::string label(const Source& src) {
  if (!src.input.empty()) return src.input;
  return src.params.empty() ? src.gen : src.gen + ":" + src.params;
}

// Bipartite instances carry their row count; other algorithms ignore it.
int rows_of(const Instance& inst) { return inst.matrix ? static_cast<int>(inst.matrix->rows()) : 0; }

int finish(const Globals& g, const ExperimentOutcome& out) {
  if (g.csv.empty()) {
    if (!g.quiet) std::cout << out.csv;
  } else {
    std::ofstream f(g.csv, std::ios::binary);
    if (!f) throw Error(ErrorCode::BadParams, "cannot write " + g.csv);
    f << out.csv;
    if (!g.quiet) fmt::print(stderr, "wrote {}\n", g.csv);
  }
  for (const auto& v : out.violations)
    if (!g.quiet || g.check) fmt::print(stderr, "{}: {}\n", g.check ? "violation" : "warning", v);
  return g.check && !out.violations.empty() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lipschitz-continuous graph algorithms and their sensitivity harness"};
  app.require_subcommand(1);
  Globals glob;
  app.add_option("--seed", glob.seed, "Base seed")->capture_default_str();
  app.add_option("--trials", glob.trials, "Trials per grid point")->capture_default_str();
  app.add_option("--csv", glob.csv, "Write the CSV here instead of stdout");
  app.add_flag("--check", glob.check, "Exit 1 on any invariant violation");
  app.add_flag("--quiet", glob.quiet, "Suppress normal output");
  app.add_flag("--serial", glob.serial, "Run trials on one thread (output is identical)");
  app.fallthrough();

  ExperimentConfig cfg;
  Source src;
  double epsilon = 0.1;
  std::optional<double> alpha, delta, gamma_override;
  std::optional<EdgeId> perturb_edge, contract_edge;
  std::vector<int> perturb_cell;
  std::optional<Vertex> source, target;
  bool pointwise = false;
  std::string emit_gadget, dump_lp, output;
  std::string algorithm = "lip-mst", metric = "weighted";

  auto* mst = app.add_subcommand("mst", "Randomized minimum spanning tree");
  add_source(mst, src, false);
  mst->add_option("--epsilon", epsilon)->capture_default_str();
  mst->add_flag("--pointwise", pointwise, "Use the pointwise-Lipschitz variant");
  mst->add_option("--perturb-edge", perturb_edge);
  mst->add_option("--delta", delta);

  auto* spu = app.add_subcommand("sp-unweighted", "Randomized unweighted shortest path");
  add_source(spu, src, false);
  spu->add_option("--source", source);
  spu->add_option("--target", target);
  spu->add_option("--epsilon", epsilon)->capture_default_str();
  spu->add_option("--gamma-override", gamma_override,
                  "Fix γ to exercise the recursion on small graphs (outside the analysed regime)");
  spu->add_option("--contract-edge", contract_edge);

  auto* spw = app.add_subcommand("sp", "Randomized weighted shortest path");
  add_source(spw, src, false);
  spw->add_option("--source", source);
  spw->add_option("--target", target);
  spw->add_option("--epsilon", epsilon)->capture_default_str();
  spw->add_option("--perturb-edge", perturb_edge);
  spw->add_option("--delta", delta);
  spw->add_option("--emit-gadget", emit_gadget, "Write the trial-0 gadget arc list here");

  auto* mwm = app.add_subcommand("mwm", "Randomized greedy maximum weight matching");
  add_source(mwm, src, false);
  auto* alpha_opt = mwm->add_option("--alpha", alpha);
  mwm->add_option("--epsilon", epsilon, "Sets α = 2 + ε")->excludes(alpha_opt);
  mwm->add_option("--perturb-edge", perturb_edge);
  mwm->add_option("--delta", delta);

  auto* bm = app.add_subcommand("bmatch", "Entropy-regularised bipartite matching");
  add_source(bm, src, true);
  bm->add_option("--epsilon", epsilon)->capture_default_str();
  bm->add_option("--perturb-cell", perturb_cell, "Row and column of the perturbed cell")
      ->expected(2);
  bm->add_option("--delta", delta);
  bm->add_option("--dump-lp", dump_lp, "Write the trial-0 LP solution x, λ, μ here");

  auto* gen = app.add_subcommand("gen", "Write a generated instance");
  std::string gen_kind, gen_params;
  gen->add_option("kind", gen_kind)->required();
  gen->add_option("--params", gen_params);
  gen->add_option("--output", output, "Defaults to stdout");

  auto* exp = app.add_subcommand("experiment", "Run a parameter grid and emit CSV");
  add_source(exp, src, false);
  exp->add_option("--algorithm", algorithm,
                  "lip-mst, plip-mst, lip-sp, sp-unweighted, lip-mwm or plip-mwbm")
      ->capture_default_str();
  exp->add_option("--epsilons", cfg.epsilons)->delimiter(',');
  exp->add_option("--alphas", cfg.alphas)->delimiter(',');
  exp->add_option("--deltas", cfg.deltas)->delimiter(',');
  exp->add_option("--edges", cfg.perturb_edges)->delimiter(',');
  exp->add_option("--contract-edge", contract_edge);
  exp->add_option("--gamma-override", gamma_override);
  exp->add_option("--source", source);
  exp->add_option("--target", target);
  exp->add_option("--metric", metric, "weighted or unweighted")->capture_default_str();
  exp->add_option("--bootstrap", cfg.bootstrap)->capture_default_str();
  exp->add_flag("--timing", cfg.timing, "Add a wall_seconds column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      const Instance inst = gen_instance(gen_kind, parse_params(gen_params), glob.seed);
      std::ofstream file;
      if (!output.empty()) {
        file.open(output, std::ios::binary);
        if (!file) throw Error(ErrorCode::BadParams, "cannot write " + output);
      }
      std::ostream& out = output.empty() ? std::cout : file;
      if (inst.matrix) write_bipartite(out, *inst.matrix);
      else write_edge_list(out, inst.graph, inst.weights);
      return 0;
    }

    const bool bipartite = bm->parsed() ||
                           (exp->parsed() && parse_algorithm(algorithm) == AlgorithmKind::PlipMwbm);
    cfg.instance = load(src, glob.seed, bipartite);
    cfg.instance_label = label(src);
    cfg.trials = glob.trials;
    cfg.seed = glob.seed;
    AlgorithmSpec& spec = cfg.algorithm;
    spec.epsilon = epsilon;
    spec.gamma_override = gamma_override;
    spec.source = source.value_or(cfg.instance.source);
    spec.target = target.value_or(cfg.instance.target);
    spec.bipartite_rows = rows_of(cfg.instance);
    cfg.contract_edge = contract_edge;

    if (exp->parsed()) {
      spec.kind = parse_algorithm(algorithm);
      if (metric == "weighted") cfg.metric = Metric::Weighted;
      else if (metric == "unweighted") cfg.metric = Metric::Unweighted;
      else throw Error(ErrorCode::BadParams, "metric must be weighted or unweighted");
    } else {
      cfg.epsilons = {epsilon};
      if (delta) cfg.deltas = {*delta};
      if (mst->parsed()) {
        spec.kind = pointwise ? AlgorithmKind::PlipMst : AlgorithmKind::LipMst;
        if (pointwise) cfg.metric = Metric::Unweighted;
      } else if (spu->parsed()) {
        spec.kind = AlgorithmKind::Sp;
        cfg.metric = Metric::Unweighted;
      } else if (spw->parsed()) {
        spec.kind = AlgorithmKind::LipSp;
      } else if (mwm->parsed()) {
        spec.kind = AlgorithmKind::LipMwm;
        if (alpha) {
          cfg.epsilons.clear();
          cfg.alphas = {*alpha};
        }
      } else if (bm->parsed()) {
        spec.kind = AlgorithmKind::PlipMwbm;
      }
      if (perturb_edge) cfg.perturb_edges = {*perturb_edge};
      if (!perturb_cell.empty()) {
        const int cols = static_cast<int>(cfg.instance.matrix->cols());
        if (perturb_cell[0] < 0 || perturb_cell[1] < 0 || perturb_cell[0] >= spec.bipartite_rows ||
            perturb_cell[1] >= cols)
          throw Error(ErrorCode::InvalidEdge, "perturbed cell out of range");
        cfg.perturb_edges = {perturb_cell[0] * cols + perturb_cell[1]};
      }
    }

    if (!emit_gadget.empty()) {
      const GadgetGraph gadget = build_gadget(cfg.instance.graph, cfg.instance.weights, spec.source,
                                              spec.target, spec.epsilon, CounterRng(glob.seed, 0));
      std::ofstream f(emit_gadget, std::ios::binary);
      if (!f) throw Error(ErrorCode::BadParams, "cannot write " + emit_gadget);
      write_arc_list(f, gadget.graph);
    }
    if (!dump_lp.empty()) {
      const auto res = plip_mwbm(*cfg.instance.matrix, spec.epsilon, CounterRng(glob.seed, 0));
      std::ofstream f(dump_lp, std::ios::binary);
      if (!f) throw Error(ErrorCode::BadParams, "cannot write " + dump_lp);
      const Eigen::IOFormat fmt_full(Eigen::FullPrecision, 0, " ", "\n");
      f << "B " << fmt::format("{:.17g}", res.B) << "\nx\n"
        << res.lp.x.format(fmt_full) << "\nlambda\n"
        << res.lp.lambda.transpose().format(fmt_full) << "\nmu\n"
        << res.lp.mu.transpose().format(fmt_full) << "\n";
    }

    return finish(glob, run_experiment(cfg, glob.serial ? Execution::Serial : Execution::Parallel));
  } catch (const Error& e) {
    fmt::print(stderr, "error [{}]: {}\n", to_string(e.code()), e.what());
    return e.code() == ErrorCode::NoConvergence ? 1 : 2;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 2;
  }
}
