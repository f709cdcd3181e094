// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lipgraph/graph.hpp"
#include "lipgraph/rng.hpp"

namespace lipgraph {

// Unit-length shortest paths that are stable under edge contraction.
// Undirected graphs ignore weights; directed graphs are unweighted.

inline constexpr double kActivityFactor = 16.0;
inline constexpr double kMaxGamma = 0.125;  // keeps [1/4 + 2γ, 3/4 - 2γ] nonempty

struct RecCall {
  std::uint64_t path;  // 1 at the root; children 2p and 2p+1
  int depth;
  Vertex s, t;
  std::int64_t opt;
  double split;  // d
  double slack;  // l
  bool base;
  std::size_t pivot_set_size = 0;
  std::size_t pivot_index = 0;
  Vertex pivot = -1;
};

struct RecTrace {
  std::vector<RecCall> calls;  // pre-order
};

// The recursive routine at a fixed γ. d and l are drawn at every call,
// including base-case calls, keyed by the call's path code.
Walk rec(const WeightedMultigraph& g, Vertex s, Vertex t, double gamma, const CounterRng& rng,
         RecTrace* trace = nullptr);
Walk di_rec(const DirectedGraph& g, Vertex s, Vertex t, double gamma, const CounterRng& rng,
            RecTrace* trace = nullptr);

// γ⁻¹ ~ Unif[720 ε⁻¹ ln n, 1440 ε⁻¹ ln n].
double sample_inverse_gamma(int n, double epsilon, const CounterRng& rng);

// `gamma_override` replaces the sampled γ; it exists to exercise the
// recursion at sizes where the sampled γ⁻¹ always exceeds opt.
Walk sp(const WeightedMultigraph& g, Vertex s, Vertex t, double epsilon, const CounterRng& rng,
        std::optional<double> gamma_override = std::nullopt, RecTrace* trace = nullptr);
Walk di_sp(const DirectedGraph& g, Vertex s, Vertex t, double epsilon, const CounterRng& rng,
           std::optional<double> gamma_override = std::nullopt, RecTrace* trace = nullptr);

// {v : opt(s,v) <= (d+l)·opt(s,t) and opt(v,t) <= (1-d+l)·opt(s,t)}, ascending.
std::vector<Vertex> pivot_set(const WeightedMultigraph& g, Vertex s, Vertex t, double d, double l);
std::vector<Vertex> pivot_set(const DirectedGraph& g, Vertex s, Vertex t, double d, double l);
std::vector<Vertex> pivot_set_from(const std::vector<std::int64_t>& from_s,
                                   const std::vector<std::int64_t>& to_t, std::int64_t opt,
                                   double d, double l);

// Shortest s-t walk lengths through a vertex or an edge; kUnreachable when
// none exists. Throw Unreachable when t is unreachable from s.
std::int64_t opt_through(const WeightedMultigraph& g, Vertex s, Vertex t, Vertex v);
std::int64_t opt_through_edge(const WeightedMultigraph& g, Vertex s, Vertex t, EdgeId e);
std::int64_t opt_through(const DirectedGraph& g, Vertex s, Vertex t, Vertex v);
std::int64_t opt_through_edge(const DirectedGraph& g, Vertex s, Vertex t, ArcId a);

// opt_through_edge <= (1 + 16γ)·opt(s,t).
bool is_active(const WeightedMultigraph& g, Vertex s, Vertex t, EdgeId e, double gamma);
bool is_active(const DirectedGraph& g, Vertex s, Vertex t, ArcId a, double gamma);

}  // namespace lipgraph
