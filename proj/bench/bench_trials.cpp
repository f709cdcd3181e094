// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

// Trial kernels in serial and parallel mode. Arg 0 is serial, 1 parallel.

#include <benchmark/benchmark.h>

#include "lipgraph/estimators.hpp"
#include "lipgraph/generators.hpp"
#include "lipgraph/lip_mst.hpp"
#include "lipgraph/lip_sp.hpp"
#include "lipgraph/plip_mwbm.hpp"
#include "lipgraph/trials.hpp"

namespace lipgraph {
namespace {

constexpr std::uint32_t kTrials = 256;

Execution mode(const benchmark::State& state) {
  return state.range(0) ? Execution::Parallel : Execution::Serial;
}

const Instance& gnm() {
  static const Instance inst = gen_instance("random-gnm", {{"n", 200}, {"m", 800}}, 1);
  return inst;
}

void BM_LipMst(benchmark::State& state) {
  const auto& inst = gnm();
  for (auto _ : state) {
    auto out = run_trials(kTrials, mode(state), [&](std::uint32_t t) {
      return lip_mst(inst.graph, inst.weights, 0.1, CounterRng(1, t)).tree.edges.size();
    });
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * kTrials);
}
BENCHMARK(BM_LipMst)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_LipSp(benchmark::State& state) {
  static const Instance inst = gen_instance("random-gnm", {{"n", 40}, {"m", 120}}, 2);
  for (auto _ : state) {
    auto out = run_trials(kTrials / 8, mode(state), [&](std::uint32_t t) {
      return lip_sp(inst.graph, inst.weights, 0, 39, 0.5, CounterRng(2, t)).length();
    });
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * (kTrials / 8));
}
BENCHMARK(BM_LipSp)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PlipMwbm(benchmark::State& state) {
  static const Instance inst = gen_instance("bipartite-random", {{"rows", 12}, {"cols", 12}}, 3);
  for (auto _ : state) {
    auto out = run_trials(kTrials, mode(state), [&](std::uint32_t t) {
      return plip_mwbm(*inst.matrix, 0.1, CounterRng(3, t)).transcript.matching.value;
    });
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * kTrials);
}
BENCHMARK(BM_PlipMwbm)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EstimateLipMst(benchmark::State& state) {
  static const Instance inst = gen_instance("random-gnm", {{"n", 8}, {"m", 14}}, 4);
  const AlgorithmSpec spec{AlgorithmKind::LipMst, 0.2};
  for (auto _ : state) {
    auto est = estimate_lipschitz(spec, inst.graph, inst.weights, 0, 0.5, 2000, 4, Metric::Weighted,
                                  {mode(state), 8});
    benchmark::DoNotOptimize(est);
  }
}
BENCHMARK(BM_EstimateLipMst)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace lipgraph

BENCHMARK_MAIN();
