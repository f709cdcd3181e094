// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "lipgraph/graph_io.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <fstream>
#include <istream>
#include <ostream>

#include "lipgraph/errors.hpp"

namespace lipgraph {
namespace {

template <class T>
T read_token(std::istream& in, const char* what) {
  T value;
  if (!(in >> value)) throw Error(ErrorCode::ParseError, std::string("expected ") + what);
  return value;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return in;
}

}  // namespace

WeightedGraph read_edge_list(std::istream& in) {
  const long n = read_token<long>(in, "vertex count");
  const long m = read_token<long>(in, "edge count");
  if (n < 0 || m < 0) throw Error(ErrorCode::ParseError, "negative header value");
  std::vector<Edge> edges;
  WeightVector w;
  edges.reserve(m);
  w.reserve(m);
  for (long i = 0; i < m; ++i) {
    const long u = read_token<long>(in, "edge endpoint");
    const long v = read_token<long>(in, "edge endpoint");
    const double x = read_token<double>(in, "edge weight");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(ErrorCode::ParseError, fmt::format("edge {} endpoint out of range", i));
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    w.push_back(x);
  }
  WeightedGraph out{WeightedMultigraph(static_cast<int>(n), std::move(edges)), std::move(w)};
  validate_weights(out.graph, out.weights);
  return out;
}

WeightedGraph read_edge_list_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const WeightedMultigraph& g, const WeightVector& w) {
  fmt::print(out, "{} {}\n", g.num_vertices(), g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    fmt::print(out, "{} {} {}\n", g.edge(e).u, g.edge(e).v, w[e]);
}

Eigen::MatrixXd read_bipartite(std::istream& in) {
  const long rows = read_token<long>(in, "row count");
  const long cols = read_token<long>(in, "column count");
  if (rows < 0 || cols < 0) throw Error(ErrorCode::ParseError, "negative header value");
  Eigen::MatrixXd w(rows, cols);
  for (long i = 0; i < rows; ++i) {
    for (long j = 0; j < cols; ++j) {
      const double x = read_token<double>(in, "matrix entry");
      if (!std::isfinite(x) || x < 0.0)
        throw Error(ErrorCode::BadParams, "bipartite weights must be finite and nonnegative");
      w(i, j) = x;
    }
  }
  return w;
}

Eigen::MatrixXd read_bipartite_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_bipartite(in);
}

void write_bipartite(std::ostream& out, const Eigen::MatrixXd& w) {
  fmt::print(out, "{} {}\n", w.rows(), w.cols());
  for (Eigen::Index i = 0; i < w.rows(); ++i) {
    for (Eigen::Index j = 0; j < w.cols(); ++j)
      fmt::print(out, "{}{}", j ? " " : "", w(i, j));
    out << '\n';
  }
}

void write_arc_list(std::ostream& out, const DirectedGraph& g) {
  fmt::print(out, "{} {}\n", g.num_vertices(), g.num_arcs());
  for (const Arc& a : g.arcs()) fmt::print(out, "{} {}\n", a.tail, a.head);
}

}  // namespace lipgraph
