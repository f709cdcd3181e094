// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "lipgraph/lip_sp.hpp"

#include <cmath>

#include "lipgraph/algorithms.hpp"
#include "lipgraph/contraction_sp.hpp"
#include "lipgraph/coupling.hpp"
#include "lipgraph/errors.hpp"
#include "lipgraph/lip_mst.hpp"

namespace lipgraph {
namespace {

void check_inputs(const WeightedMultigraph& g, const WeightVector& w, Vertex s, Vertex t,
                  double epsilon) {
  validate_weights(g, w);
  if (!g.valid_vertex(s) || !g.valid_vertex(t))
    throw Error(ErrorCode::BadParams, "source or target out of range");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw Error(ErrorCode::BadParams, "epsilon must lie in (0,1)");
}

double shortest_distance(const WeightedMultigraph& g, const WeightVector& w, Vertex s, Vertex t) {
  const double opt = dijkstra(g, w, s).dist[t];
  if (std::isinf(opt)) throw Error(ErrorCode::Unreachable, "target not reachable from source");
  return opt;
}

Walk zero_weight_path(const WeightedMultigraph& g, const WeightVector& w, Vertex s, Vertex t) {
  std::vector<bool> usable(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) usable[e] = w[e] == 0.0;
  return *bfs_path(g, s, t, &usable);
}

std::vector<double> edge_uniforms(const WeightedMultigraph& g, const CounterRng& rng) {
  std::vector<double> x(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) x[e] = rng.uniform(Stream::GadgetUniform, e);
  return x;
}

Walk solve_on_gadget(const WeightedMultigraph& g, const GadgetGraph& gadget, Vertex s, Vertex t,
                     double epsilon, const CounterRng& rng) {
  const Walk hat = di_sp(gadget.graph, s, t, epsilon / 4, rng);
  return map_walk_back(g, gadget, hat);
}

}  // namespace

std::int64_t rounded_length(double w, double b, double x) {
  const double level = std::floor(w / b);
  const double threshold = ((level + 1) * b - w) / b;
  return static_cast<std::int64_t>(level) + (x <= threshold ? 2 : 3);
}

double shifted_uniform(double x, double delta, double b) {
  const double y = x - delta / b;
  const double wrapped = y - std::floor(y);
  return wrapped == 0.0 ? 1.0 : wrapped;
}

ScaleRange gadget_scale_range(double opt, int n, double epsilon) {
  return {epsilon * opt / (12.0 * n), epsilon * opt / (6.0 * n)};
}

GadgetGraph build_gadget(const WeightedMultigraph& g, const WeightVector& w, Vertex s, Vertex t,
                         double epsilon, const CounterRng& rng) {
  check_inputs(g, w, s, t, epsilon);
  const double opt = shortest_distance(g, w, s, t);
  if (!(opt > 0.0)) throw Error(ErrorCode::BadParams, "gadget needs a positive optimum");
  const ScaleRange r = gadget_scale_range(opt, g.num_vertices(), epsilon);
  const double b = rng.uniform(Stream::GadgetScale, 0, 0, r.lo, r.hi);
  return build_gadget_with(g, w, epsilon, b, edge_uniforms(g, rng));
}

GadgetGraph build_gadget_with(const WeightedMultigraph& g, const WeightVector& w, double epsilon,
                              double b, std::span<const double> x) {
  GadgetGraph out;
  const int n = g.num_vertices();
  out.scale = b;
  out.base_vertices = n;
  out.length_limit = 12.0 * n / epsilon + 3.0;
  std::vector<Arc> arcs;
  Vertex next = n;
  auto lay_path = [&](Vertex from, Vertex to, std::int64_t k, EdgeId e, bool forward,
                      std::vector<ArcId>& ids) {
    const Vertex first_interior = next;
    next += static_cast<Vertex>(k - 1);
    for (std::int64_t p = 0; p < k; ++p) {
      const Vertex tail = p == 0 ? from : first_interior + static_cast<Vertex>(p - 1);
      const Vertex head = p == k - 1 ? to : first_interior + static_cast<Vertex>(p);
      ids.push_back(static_cast<ArcId>(arcs.size()));
      arcs.push_back({tail, head});
      out.arc_owner.push_back({e, forward, static_cast<std::int32_t>(p)});
    }
  };
  out.edges.reserve(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    GadgetEdge rec{e, static_cast<std::int64_t>(std::floor(w[e] / b)), x[e],
                   rounded_length(w[e], b, x[e]), false, {}, {}};
    rec.included = static_cast<double>(rec.rounded) <= out.length_limit && !g.is_self_loop(e);
    if (rec.included) {
      lay_path(g.edge(e).u, g.edge(e).v, rec.rounded, e, true, rec.forward_arcs);
      lay_path(g.edge(e).v, g.edge(e).u, rec.rounded, e, false, rec.backward_arcs);
    }
    out.edges.push_back(std::move(rec));
  }
  out.graph = DirectedGraph(next, std::move(arcs));
  return out;
}

Walk map_walk_back(const WeightedMultigraph& g, const GadgetGraph& gadget, const Walk& hat) {
  if (hat.source >= gadget.base_vertices || hat.target >= gadget.base_vertices)
    throw Error(ErrorCode::MalformedWalk, "walk endpoints must be original vertices");
  Walk out{hat.source, hat.target, {}};
  ArcOwner current{-1, true, 0};
  std::int32_t expected = 0;
  for (const Step& step : hat.steps) {
    if (step.edge < 0 || step.edge >= gadget.graph.num_arcs())
      throw Error(ErrorCode::MalformedWalk, "arc id out of range");
    const ArcOwner& owner = gadget.arc_owner[step.edge];
    if (expected == 0) {
      current = owner;
    } else if (owner.edge != current.edge || owner.forward != current.forward) {
      throw Error(ErrorCode::MalformedWalk, "walk leaves a gadget path midway");
    }
    if (owner.position != expected) throw Error(ErrorCode::MalformedWalk, "walk enters a gadget path midway");
    if (++expected == gadget.edges[owner.edge].rounded) {
      out.steps.push_back({owner.edge, owner.forward});
      expected = 0;
    }
  }
  if (expected != 0) throw Error(ErrorCode::MalformedWalk, "walk ends inside a gadget path");
  if (!is_valid_walk(g, out)) throw Error(ErrorCode::MalformedWalk, "mapped walk does not chain");
  return out;
}

LipSpRun lip_sp_run(const WeightedMultigraph& g, const WeightVector& w, Vertex s, Vertex t,
                    double epsilon, const CounterRng& rng) {
  check_inputs(g, w, s, t, epsilon);
  LipSpRun run;
  run.opt = shortest_distance(g, w, s, t);
  if (!(run.opt > 0.0)) {
    run.zero_optimum = true;
    run.walk = zero_weight_path(g, w, s, t);
    return run;
  }
  const GadgetGraph gadget = build_gadget(g, w, s, t, epsilon, rng);
  run.scale = gadget.scale;
  run.gadget_vertices = static_cast<std::size_t>(gadget.graph.num_vertices());
  run.walk = solve_on_gadget(g, gadget, s, t, epsilon, rng);
  return run;
}

CoupledLipSp lip_sp_coupled(const WeightedMultigraph& g, const WeightVector& w, Vertex s,
                            Vertex t, EdgeId f, double delta, double epsilon,
                            const CounterRng& rng) {
  check_inputs(g, w, s, t, epsilon);
  const WeightVector w2 = shifted_weights(w, f, delta);
  const double opt = shortest_distance(g, w, s, t);
  const double opt2 = shortest_distance(g, w2, s, t);
  CoupledLipSp out;
  if (!(opt > 0.0) || !(opt2 > 0.0)) {
    out.base = lip_sp(g, w, s, t, epsilon, rng);
    out.shifted = lip_sp(g, w2, s, t, epsilon, rng);
    out.scale_split = true;
    return out;
  }
  const int n = g.num_vertices();
  const ScaleRange r = gadget_scale_range(opt, n, epsilon);
  const ScaleRange r2 = gadget_scale_range(opt2, n, epsilon);
  const CoupledReal b = couple_uniform_intervals(
      r.lo, r.hi, r2.lo, r2.hi, rng.uniform(Stream::GadgetScale, 0),
      rng.uniform(Stream::GadgetCoupling, 0, 0), rng.uniform(Stream::GadgetCoupling, 0, 1));
  std::vector<double> x = edge_uniforms(g, rng);
  const GadgetGraph base = build_gadget_with(g, w, epsilon, b.first, x);
  out.scale_split = !b.equal;
  if (b.equal) x[f] = shifted_uniform(x[f], delta, b.first);
  const GadgetGraph shifted = build_gadget_with(g, w2, epsilon, b.second, x);
  out.rounded_base = base.edges[f].rounded;
  out.rounded_shifted = shifted.edges[f].rounded;
  out.path_split = b.equal && base.edges[f].included != shifted.edges[f].included;
  out.base = solve_on_gadget(g, base, s, t, epsilon, rng);
  out.shifted = solve_on_gadget(g, shifted, s, t, epsilon, rng);
  return out;
}

}  // namespace lipgraph
