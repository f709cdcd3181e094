// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "lipgraph/generators.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "lipgraph/algorithms.hpp"
#include "lipgraph/errors.hpp"
#include "lipgraph/rng.hpp"

namespace lipgraph {
namespace {

constexpr int kMaxRegenerations = 10000;

double get(const GeneratorParams& p, const std::string& key, std::optional<double> fallback = {}) {
  auto it = p.find(key);
  if (it != p.end()) return it->second;
  if (fallback) return *fallback;
  throw Error(ErrorCode::BadParams, "missing generator parameter '" + key + "'");
}

int get_count(const GeneratorParams& p, const std::string& key, int min_value,
              std::optional<double> fallback = {}) {
  const double v = get(p, key, fallback);
  if (v != std::floor(v) || v < min_value || v > 1e6)
    throw Error(ErrorCode::BadParams, fmt::format("parameter {}={} must be an integer >= {}", key, v, min_value));
  return static_cast<int>(v);
}

Instance unit_instance(std::string kind, int n, std::vector<Edge> edges, Vertex s, Vertex t) {
  Instance out;
  out.kind = std::move(kind);
  out.weights.assign(edges.size(), 1.0);
  out.graph = WeightedMultigraph(n, std::move(edges));
  out.source = s;
  out.target = t;
  return out;
}

Instance two_edge_gadget(std::string kind, WeightVector w) {
  Instance out;
  out.kind = std::move(kind);
  out.graph = WeightedMultigraph(2, {{0, 1}, {0, 1}});
  out.weights = std::move(w);
  out.source = 0;
  out.target = 1;
  return out;
}

Instance random_gnm(const GeneratorParams& p, std::uint64_t seed) {
  const int n = get_count(p, "n", 1);
  const int m = get_count(p, "m", 0);
  const double wmin = get(p, "wmin", 1.0), wmax = get(p, "wmax", 9.0);
  const bool integer = get(p, "integer", 1.0) != 0.0;
  const long pairs = static_cast<long>(n) * (n - 1) / 2;
  if (m < n - 1 || m > pairs)
    throw Error(ErrorCode::BadParams, fmt::format("random-gnm needs n-1 <= m <= {}", pairs));
  if (!(wmin >= 0.0) || !(wmax >= wmin) || (integer && (wmin != std::floor(wmin) || wmax != std::floor(wmax))))
    throw Error(ErrorCode::BadParams, "bad weight range");

  const CounterRng rng(seed, 0);
  for (int attempt = 0; attempt < kMaxRegenerations; ++attempt) {
    DrawSequence draws(rng, Stream::Generator, static_cast<std::uint64_t>(attempt));
    // Partial Fisher-Yates over the pair indices.
    std::vector<long> ids(pairs);
    std::iota(ids.begin(), ids.end(), 0L);
    std::vector<Edge> edges;
    for (int k = 0; k < m; ++k) {
      const long pick = k + static_cast<long>(draws.below(pairs - k));
      std::swap(ids[k], ids[pick]);
      long idx = ids[k];
      Vertex u = 0;
      while (idx >= n - 1 - u) idx -= n - 1 - u++;
      edges.push_back({u, static_cast<Vertex>(u + 1 + idx)});
    }
    WeightedMultigraph g(n, edges);
    if (!is_connected(g)) continue;
    WeightVector w(m);
    for (auto& x : w) {
      x = integer ? wmin + static_cast<double>(draws.below(static_cast<std::uint64_t>(wmax - wmin) + 1))
                  : draws.uniform(wmin, wmax);
    }
    Instance out;
    out.kind = "random-gnm";
    out.graph = std::move(g);
    out.weights = std::move(w);
    out.source = 0;
    out.target = n - 1;
    return out;
  }
  throw Error(ErrorCode::BadParams, "random-gnm found no connected graph");
}

}  // namespace

GeneratorParams parse_params(const std::string& text) {
  GeneratorParams out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::BadParams, "expected key=value, got " + item);
    try {
      std::size_t used = 0;
      const std::string value = item.substr(eq + 1);
      out[item.substr(0, eq)] = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadParams, "bad number in " + item);
    }
  }
  return out;
}

Instance gen_instance(const std::string& kind, const GeneratorParams& p, std::uint64_t seed) {
  if (kind == "random-gnm") return random_gnm(p, seed);
  if (kind == "path") {
    const int k = get_count(p, "k", 1);
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) edges.push_back({i, i + 1});
    return unit_instance(kind, k + 1, std::move(edges), 0, k);
  }
  if (kind == "cycle") {
    const int k = get_count(p, "k", 3);
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) edges.push_back({i, (i + 1) % k});
    return unit_instance(kind, k, std::move(edges), 0, k / 2);
  }
  if (kind == "grid") {
    const int r = get_count(p, "rows", 1), c = get_count(p, "cols", 1);
    std::vector<Edge> edges;
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < c; ++j) {
        if (j + 1 < c) edges.push_back({i * c + j, i * c + j + 1});
        if (i + 1 < r) edges.push_back({i * c + j, (i + 1) * c + j});
      }
    }
    return unit_instance(kind, r * c, std::move(edges), 0, r * c - 1);
  }
  if (kind == "gadget-thm1") return two_edge_gadget(kind, {0.0, 1.0});
  if (kind == "gadget-thm6") {
    const double eps = get(p, "eps");
    if (!(eps > 0.0 && eps < 0.1)) throw Error(ErrorCode::BadParams, "gadget-thm6 needs 0 < eps < 0.1");
    return two_edge_gadget(kind, {1.0, 1.0 - 10.0 * eps});
  }
  if (kind == "gadget-thm8") {
    Instance out = two_edge_gadget(kind, {1.0, 0.0});
    out.alternate = WeightVector{0.0, 1.0};
    return out;
  }
  if (kind == "bipartite-random") {
    const int r = get_count(p, "rows", 1), c = get_count(p, "cols", 1);
    const double wmax = get(p, "wmax", 1.0);
    if (!(wmax > 0.0)) throw Error(ErrorCode::BadParams, "wmax must be positive");
    DrawSequence draws(CounterRng(seed, 0), Stream::Generator, 0);
    Eigen::MatrixXd w(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) w(i, j) = draws.uniform(0.0, wmax);
    WeightedGraph bg = complete_bipartite(w);
    Instance out;
    out.kind = kind;
    out.graph = std::move(bg.graph);
    out.weights = std::move(bg.weights);
    out.matrix = std::move(w);
    return out;
  }
  throw Error(ErrorCode::BadParams, "unknown instance kind '" + kind + "'");
}

}  // namespace lipgraph
