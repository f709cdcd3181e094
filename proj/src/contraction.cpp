// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "lipgraph/contraction.hpp"

#include "lipgraph/errors.hpp"

namespace lipgraph {
namespace {

// Old vertex ids minus {u, v}, compacted in order, with both endpoints sent
// to the appended merged vertex.
std::vector<Vertex> merge_map(int n, Vertex u, Vertex v, Vertex& merged) {
  std::vector<Vertex> map(n);
  Vertex next = 0;
  for (Vertex x = 0; x < n; ++x) {
    if (x != u && x != v) map[x] = next++;
  }
  merged = next;
  map[u] = map[v] = merged;
  return map;
}

}  // namespace

ContractedGraph contract_edge(const WeightedMultigraph& g, EdgeId e) {
  if (!g.valid_edge(e)) throw Error(ErrorCode::InvalidEdge, "edge id out of range");
  if (g.is_self_loop(e)) throw Error(ErrorCode::SelfLoop, "cannot contract a self-loop");
  ContractedGraph out;
  const Edge ce = g.edge(e);
  out.vertex_map = merge_map(g.num_vertices(), ce.u, ce.v, out.merged);
  out.edge_map.assign(g.num_edges(), -1);
  std::vector<Edge> edges;
  std::vector<bool> loops;
  for (EdgeId f = 0; f < g.num_edges(); ++f) {
    if (f == e) continue;
    const Edge nf{out.vertex_map[g.edge(f).u], out.vertex_map[g.edge(f).v]};
    out.edge_map[f] = static_cast<EdgeId>(edges.size());
    out.origin.push_back(f);
    // Loops already present keep their flag; new ones come from parallel edges.
    loops.push_back(g.is_contraction_loop(f) || (nf.u == nf.v && !g.is_self_loop(f)));
    edges.push_back(nf);
  }
  out.graph = WeightedMultigraph(g.num_vertices() - 1, std::move(edges), std::move(loops));
  return out;
}

std::vector<EdgeId> original_edges(const ContractedGraph& c, const Walk& walk) {
  std::vector<EdgeId> ids;
  ids.reserve(walk.steps.size());
  for (const Step& s : walk.steps) ids.push_back(c.origin[s.edge]);
  return ids;
}

bool is_contractible(const DirectedGraph& g, ArcId a) {
  if (a < 0 || a >= g.num_arcs()) return false;
  const Arc arc = g.arc(a);
  if (arc.tail == arc.head) return false;
  return g.out_degree(arc.tail) == 1 && g.in_degree(arc.tail) == 1 &&
         g.out_degree(arc.head) == 1 && g.in_degree(arc.head) == 1;
}

ContractedDigraph contract_directed(const DirectedGraph& g, ArcId a) {
  if (!is_contractible(g, a))
    throw Error(ErrorCode::NotContractible, "arc endpoints need in- and out-degree 1");
  ContractedDigraph out;
  const Arc ca = g.arc(a);
  out.vertex_map = merge_map(g.num_vertices(), ca.tail, ca.head, out.merged);
  out.arc_map.assign(g.num_arcs(), -1);
  std::vector<Arc> arcs;
  for (ArcId b = 0; b < g.num_arcs(); ++b) {
    if (b == a) continue;
    out.arc_map[b] = static_cast<ArcId>(arcs.size());
    out.origin.push_back(b);
    arcs.push_back({out.vertex_map[g.arc(b).tail], out.vertex_map[g.arc(b).head]});
  }
  out.graph = DirectedGraph(g.num_vertices() - 1, std::move(arcs));
  return out;
}

}  // namespace lipgraph
