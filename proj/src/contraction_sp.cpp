// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "lipgraph/contraction_sp.hpp"

#include <cmath>
#include <stdexcept>

#include "lipgraph/algorithms.hpp"
#include "lipgraph/errors.hpp"

namespace lipgraph {
namespace {

constexpr int kMaxDepth = 47;  // path codes must fit the 48-bit rng entity

std::vector<std::int64_t> dist_to(const WeightedMultigraph& g, Vertex t) { return bfs_dist(g, t); }
std::vector<std::int64_t> dist_to(const DirectedGraph& g, Vertex t) { return bfs_dist_to(g, t); }

template <class G>
void check_endpoints(const G& g, Vertex s, Vertex t) {
  if (!g.valid_vertex(s) || !g.valid_vertex(t))
    throw Error(ErrorCode::BadParams, "source or target out of range");
}

void check_gamma(double gamma) {
  if (!(gamma > 0.0) || gamma > kMaxGamma)
    throw Error(ErrorCode::BadParams, "gamma must lie in (0, 1/8]");
}

std::int64_t add_hops(std::int64_t a, std::int64_t b) {
  return (a == kUnreachable || b == kUnreachable) ? kUnreachable : a + b;
}

template <class G>
struct Recursion {
  const G& g;
  double gamma;
  double inv_gamma;
  const CounterRng& rng;
  RecTrace* trace;
  std::vector<Step>& out;

  void run(Vertex s, Vertex t, std::uint64_t path, int depth) {
    if (depth > kMaxDepth) throw Error(ErrorCode::BadParams, "recursion too deep for path codes");
    const double d = rng.uniform(Stream::RecSplit, path, 0, 0.25 + 2 * gamma, 0.75 - 2 * gamma);
    const double l = rng.uniform(Stream::RecSlack, path, 0, gamma, 2 * gamma);
    auto shortest = bfs_path(g, s, t);
    if (!shortest) throw Error(ErrorCode::Unreachable, "target not reachable from source");
    const auto opt = static_cast<std::int64_t>(shortest->length());
    RecCall call{path, depth, s, t, opt, d, l, false};

    if (static_cast<double>(opt) <= inv_gamma) {
      call.base = true;
      if (trace) trace->calls.push_back(call);
      out.insert(out.end(), shortest->steps.begin(), shortest->steps.end());
      return;
    }
    const auto pivots = pivot_set_from(bfs_dist(g, s), dist_to(g, t), opt, d, l);
    // Nonempty whenever opt > γ⁻¹; an empty set means a broken invariant.
    if (pivots.empty()) throw std::logic_error("empty pivot set above the base case");
    call.pivot_set_size = pivots.size();
    call.pivot_index = rng.below(Stream::RecPivot, path, 0, pivots.size());
    call.pivot = pivots[call.pivot_index];
    if (trace) trace->calls.push_back(call);
    run(s, call.pivot, 2 * path, depth + 1);
    run(call.pivot, t, 2 * path + 1, depth + 1);
  }
};

template <class G>
Walk rec_any(const G& g, Vertex s, Vertex t, double gamma, double inv_gamma,
             const CounterRng& rng, RecTrace* trace) {
  check_endpoints(g, s, t);
  Walk walk{s, t, {}};
  Recursion<G>{g, gamma, inv_gamma, rng, trace, walk.steps}.run(s, t, 1, 0);
  return walk;
}

template <class G>
Walk sp_any(const G& g, Vertex s, Vertex t, double epsilon, const CounterRng& rng,
            std::optional<double> gamma_override, RecTrace* trace) {
  check_endpoints(g, s, t);
  if (gamma_override) {
    check_gamma(*gamma_override);
    return rec_any(g, s, t, *gamma_override, 1.0 / *gamma_override, rng, trace);
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw Error(ErrorCode::BadParams, "epsilon must lie in (0,1)");
  if (s == t) return Walk{s, t, {}};
  const double inv_gamma = sample_inverse_gamma(g.num_vertices(), epsilon, rng);
  return rec_any(g, s, t, 1.0 / inv_gamma, inv_gamma, rng, trace);
}

template <class G>
std::vector<Vertex> pivot_set_any(const G& g, Vertex s, Vertex t, double d, double l) {
  check_endpoints(g, s, t);
  const auto from_s = bfs_dist(g, s);
  if (from_s[t] == kUnreachable) throw Error(ErrorCode::Unreachable, "target not reachable");
  return pivot_set_from(from_s, dist_to(g, t), from_s[t], d, l);
}

template <class G>
std::int64_t opt_through_any(const G& g, Vertex s, Vertex t, Vertex v) {
  check_endpoints(g, s, t);
  const auto from_s = bfs_dist(g, s);
  if (from_s[t] == kUnreachable) throw Error(ErrorCode::Unreachable, "target not reachable");
  return add_hops(from_s[v], dist_to(g, t)[v]);
}

}  // namespace

Walk rec(const WeightedMultigraph& g, Vertex s, Vertex t, double gamma, const CounterRng& rng,
         RecTrace* trace) {
  check_gamma(gamma);
  return rec_any(g, s, t, gamma, 1.0 / gamma, rng, trace);
}

Walk di_rec(const DirectedGraph& g, Vertex s, Vertex t, double gamma, const CounterRng& rng,
            RecTrace* trace) {
  check_gamma(gamma);
  return rec_any(g, s, t, gamma, 1.0 / gamma, rng, trace);
}

double sample_inverse_gamma(int n, double epsilon, const CounterRng& rng) {
  if (n < 2) throw Error(ErrorCode::BadParams, "gamma sampling needs at least two vertices");
  const double lo = 720.0 / epsilon * std::log(static_cast<double>(n));
  return rng.uniform(Stream::SpGamma, 0, 0, lo, 2 * lo);
}

Walk sp(const WeightedMultigraph& g, Vertex s, Vertex t, double epsilon, const CounterRng& rng,
        std::optional<double> gamma_override, RecTrace* trace) {
  return sp_any(g, s, t, epsilon, rng, gamma_override, trace);
}

Walk di_sp(const DirectedGraph& g, Vertex s, Vertex t, double epsilon, const CounterRng& rng,
           std::optional<double> gamma_override, RecTrace* trace) {
  return sp_any(g, s, t, epsilon, rng, gamma_override, trace);
}

std::vector<Vertex> pivot_set_from(const std::vector<std::int64_t>& from_s,
                                   const std::vector<std::int64_t>& to_t, std::int64_t opt,
                                   double d, double l) {
  const double a = (d + l) * static_cast<double>(opt);
  const double b = (1.0 - d + l) * static_cast<double>(opt);
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < from_s.size(); ++v) {
    if (from_s[v] == kUnreachable || to_t[v] == kUnreachable) continue;
    if (static_cast<double>(from_s[v]) <= a && static_cast<double>(to_t[v]) <= b)
      out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::vector<Vertex> pivot_set(const WeightedMultigraph& g, Vertex s, Vertex t, double d, double l) {
  return pivot_set_any(g, s, t, d, l);
}

std::vector<Vertex> pivot_set(const DirectedGraph& g, Vertex s, Vertex t, double d, double l) {
  return pivot_set_any(g, s, t, d, l);
}

std::int64_t opt_through(const WeightedMultigraph& g, Vertex s, Vertex t, Vertex v) {
  return opt_through_any(g, s, t, v);
}

std::int64_t opt_through(const DirectedGraph& g, Vertex s, Vertex t, Vertex v) {
  return opt_through_any(g, s, t, v);
}

std::int64_t opt_through_edge(const WeightedMultigraph& g, Vertex s, Vertex t, EdgeId e) {
  check_endpoints(g, s, t);
  if (!g.valid_edge(e)) throw Error(ErrorCode::InvalidEdge, "edge id out of range");
  const auto from_s = bfs_dist(g, s);
  if (from_s[t] == kUnreachable) throw Error(ErrorCode::Unreachable, "target not reachable");
  const auto to_t = bfs_dist(g, t);
  const Edge ed = g.edge(e);
  return std::min(add_hops(add_hops(from_s[ed.u], 1), to_t[ed.v]),
                  add_hops(add_hops(from_s[ed.v], 1), to_t[ed.u]));
}

std::int64_t opt_through_edge(const DirectedGraph& g, Vertex s, Vertex t, ArcId a) {
  check_endpoints(g, s, t);
  if (a < 0 || a >= g.num_arcs()) throw Error(ErrorCode::InvalidEdge, "arc id out of range");
  const auto from_s = bfs_dist(g, s);
  if (from_s[t] == kUnreachable) throw Error(ErrorCode::Unreachable, "target not reachable");
  const auto to_t = bfs_dist_to(g, t);
  return add_hops(add_hops(from_s[g.arc(a).tail], 1), to_t[g.arc(a).head]);
}

bool is_active(const WeightedMultigraph& g, Vertex s, Vertex t, EdgeId e, double gamma) {
  const std::int64_t through = opt_through_edge(g, s, t, e);
  const auto opt = bfs_dist(g, s)[t];
  return through != kUnreachable &&
         static_cast<double>(through) <= (1.0 + kActivityFactor * gamma) * static_cast<double>(opt);
}

bool is_active(const DirectedGraph& g, Vertex s, Vertex t, ArcId a, double gamma) {
  const std::int64_t through = opt_through_edge(g, s, t, a);
  const auto opt = bfs_dist(g, s)[t];
  return through != kUnreachable &&
         static_cast<double>(through) <= (1.0 + kActivityFactor * gamma) * static_cast<double>(opt);
}

}  // namespace lipgraph
