// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "lipgraph/algorithms.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>

#include "lipgraph/errors.hpp"

namespace lipgraph {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

std::vector<std::int64_t> bfs_dist(const WeightedMultigraph& g, Vertex s) {
  std::vector<std::int64_t> dist(g.num_vertices(), kUnreachable);
  std::vector<Vertex> queue{s};
  dist[s] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (EdgeId e : g.incident(x)) {
      const Vertex y = g.other(e, x);
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::vector<std::int64_t> bfs_dist(const DirectedGraph& g, Vertex s) {
  std::vector<std::int64_t> dist(g.num_vertices(), kUnreachable);
  std::vector<Vertex> queue{s};
  dist[s] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (ArcId a : g.out_arcs(x)) {
      const Vertex y = g.arc(a).head;
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::vector<std::int64_t> bfs_dist_to(const DirectedGraph& g, Vertex t) {
  std::vector<std::int64_t> dist(g.num_vertices(), kUnreachable);
  std::vector<Vertex> queue{t};
  dist[t] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (ArcId a : g.in_arcs(x)) {
      const Vertex y = g.arc(a).tail;
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::optional<Walk> bfs_path(const WeightedMultigraph& g, Vertex s, Vertex t,
                             const std::vector<bool>* usable) {
  Walk walk{s, t, {}};
  if (s == t) return walk;
  std::vector<EdgeId> via(g.num_vertices(), -1);
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<Vertex> queue{s};
  seen[s] = true;
  for (std::size_t head = 0; head < queue.size() && !seen[t]; ++head) {
    const Vertex x = queue[head];
    for (EdgeId e : g.incident(x)) {
      if (usable && !(*usable)[e]) continue;
      const Vertex y = g.other(e, x);
      if (!seen[y]) {
        seen[y] = true;
        via[y] = e;
        queue.push_back(y);
      }
    }
  }
  if (!seen[t]) return std::nullopt;
  for (Vertex y = t; y != s;) {
    const EdgeId e = via[y];
    const Vertex x = g.other(e, y);
    walk.steps.push_back({e, g.edge(e).u == x});
    y = x;
  }
  std::reverse(walk.steps.begin(), walk.steps.end());
  return walk;
}

std::optional<Walk> bfs_path(const DirectedGraph& g, Vertex s, Vertex t) {
  Walk walk{s, t, {}};
  if (s == t) return walk;
  std::vector<ArcId> via(g.num_vertices(), -1);
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<Vertex> queue{s};
  seen[s] = true;
  for (std::size_t head = 0; head < queue.size() && !seen[t]; ++head) {
    for (ArcId a : g.out_arcs(queue[head])) {
      const Vertex y = g.arc(a).head;
      if (!seen[y]) {
        seen[y] = true;
        via[y] = a;
        queue.push_back(y);
      }
    }
  }
  if (!seen[t]) return std::nullopt;
  for (Vertex y = t; y != s; y = g.arc(via[y]).tail) walk.steps.push_back({via[y], true});
  std::reverse(walk.steps.begin(), walk.steps.end());
  return walk;
}

ShortestPaths dijkstra(const WeightedMultigraph& g, const WeightVector& w, Vertex s) {
  ShortestPaths sp{std::vector<double>(g.num_vertices(), kInf),
                   std::vector<EdgeId>(g.num_vertices(), -1)};
  using Item = std::pair<double, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  sp.dist[s] = 0.0;
  heap.push({0.0, s});
  while (!heap.empty()) {
    const auto [d, x] = heap.top();
    heap.pop();
    if (d > sp.dist[x]) continue;
    for (EdgeId e : g.incident(x)) {
      const Vertex y = g.other(e, x);
      const double nd = d + w[e];
      if (nd < sp.dist[y]) {
        sp.dist[y] = nd;
        sp.pred[y] = e;
        heap.push({nd, y});
      }
    }
  }
  return sp;
}

std::optional<Walk> dijkstra_path(const WeightedMultigraph& g, const WeightVector& w, Vertex s,
                                  Vertex t) {
  const ShortestPaths sp = dijkstra(g, w, s);
  if (sp.dist[t] == kInf) return std::nullopt;
  Walk walk{s, t, {}};
  for (Vertex y = t; y != s;) {
    const EdgeId e = sp.pred[y];
    const Vertex x = g.other(e, y);
    walk.steps.push_back({e, g.edge(e).u == x});
    y = x;
  }
  std::reverse(walk.steps.begin(), walk.steps.end());
  return walk;
}

SpanningTree kruskal_mst(const WeightedMultigraph& g, const WeightVector& w) {
  std::vector<EdgeId> order(g.num_edges());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](EdgeId a, EdgeId b) { return w[a] < w[b] || (w[a] == w[b] && a < b); });
  DisjointSets sets(g.num_vertices());
  SpanningTree tree;
  for (EdgeId e : order) {
    if (sets.unite(g.edge(e).u, g.edge(e).v)) tree.edges.push_back(e);
  }
  if (static_cast<int>(tree.edges.size()) != std::max(g.num_vertices() - 1, 0))
    throw Error(ErrorCode::DisconnectedGraph, "graph has no spanning tree");
  std::sort(tree.edges.begin(), tree.edges.end());
  return tree;
}

Matching exact_max_weight_matching(const WeightedMultigraph& g, const WeightVector& w) {
  if (g.num_edges() > kExactMatchingMaxEdges)
    throw Error(ErrorCode::TooLarge, "exact matching supports at most 24 edges");
  std::vector<EdgeId> cand;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (w[e] > 0.0 && !g.is_self_loop(e)) cand.push_back(e);
  std::vector<double> suffix(cand.size() + 1, 0.0);
  for (std::size_t k = cand.size(); k-- > 0;) suffix[k] = suffix[k + 1] + w[cand[k]];

  // Include-first DFS meets optimal sets in lexicographic order, so only a
  // strictly better value replaces the incumbent.
  std::vector<bool> used(g.num_vertices(), false);
  std::vector<EdgeId> current, best;
  double best_value = -1.0;
  std::function<void(std::size_t, double)> dfs = [&](std::size_t k, double value) {
    if (value + suffix[k] <= best_value) return;
    if (k == cand.size()) {
      best_value = value;
      best = current;
      return;
    }
    const Edge& e = g.edge(cand[k]);
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = true;
      current.push_back(cand[k]);
      dfs(k + 1, value + w[cand[k]]);
      current.pop_back();
      used[e.u] = used[e.v] = false;
    }
    dfs(k + 1, value);
  };
  dfs(0, 0.0);
  return Matching{best};
}

BipartiteMatching hungarian_bipartite(const Eigen::MatrixXd& w) {
  const bool transposed = w.rows() > w.cols();
  const Eigen::MatrixXd a = transposed ? Eigen::MatrixXd(w.transpose()) : w;
  const int n = static_cast<int>(a.rows());
  const int m = static_cast<int>(a.cols());
  BipartiteMatching out;
  if (n == 0) return out;

  // Shortest augmenting paths with potentials on cost = -w; rows and columns
  // are 1-based, index 0 is the virtual root.
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<int> match(m + 1, 0), way(m + 1, 0);
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<double> minv(m + 1, kInf);
    std::vector<bool> done(m + 1, false);
    do {
      done[j0] = true;
      const int i0 = match[j0];
      double delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= m; ++j) {
        if (done[j]) continue;
        const double cur = -a(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= m; ++j) {
        if (done[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  for (int j = 1; j <= m; ++j) {
    if (match[j] == 0) continue;
    const int r = match[j] - 1, c = j - 1;
    if (a(r, c) <= 0.0) continue;
    out.pairs.push_back(transposed ? std::make_pair(c, r) : std::make_pair(r, c));
    out.value += a(r, c);
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

WeightedGraph complete_bipartite(const Eigen::MatrixXd& w) {
  const int r = static_cast<int>(w.rows()), c = static_cast<int>(w.cols());
  std::vector<Edge> edges;
  WeightVector weights;
  edges.reserve(static_cast<std::size_t>(r) * c);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) {
      edges.push_back({i, r + j});
      weights.push_back(w(i, j));
    }
  }
  return {WeightedMultigraph(r + c, std::move(edges)), std::move(weights)};
}

}  // namespace lipgraph
