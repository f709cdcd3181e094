// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "lipgraph/plip_mwbm.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

#include "lipgraph/coupling.hpp"
#include "lipgraph/errors.hpp"

namespace lipgraph {
namespace {

// log Σ exp(a_k) over a strided view.
template <class Vec>
double log_sum_exp(const Vec& a) {
  const double m = a.maxCoeff();
  if (std::isinf(m)) return m;
  return m + std::log((a.array() - m).exp().sum());
}

struct Residuals {
  double violation = 0.0;
  double slackness = 0.0;
};

Residuals residuals(const Eigen::MatrixXd& x, const Eigen::VectorXd& lambda,
                    const Eigen::VectorXd& mu) {
  Residuals r;
  const Eigen::VectorXd rows = x.rowwise().sum();
  const Eigen::VectorXd cols = x.colwise().sum().transpose();
  for (Eigen::Index i = 0; i < rows.size(); ++i) {
    r.violation = std::max(r.violation, rows[i] - 1.0);
    r.slackness = std::max(r.slackness, lambda[i] * std::abs(1.0 - rows[i]));
  }
  for (Eigen::Index j = 0; j < cols.size(); ++j) {
    r.violation = std::max(r.violation, cols[j] - 1.0);
    r.slackness = std::max(r.slackness, mu[j] * std::abs(1.0 - cols[j]));
  }
  return r;
}

Eigen::MatrixXd exponent(const Eigen::MatrixXd& w, const Eigen::VectorXd& lambda,
                         const Eigen::VectorXd& mu, double B) {
  return ((w.colwise() - lambda).rowwise() - mu.transpose()) / B - Eigen::MatrixXd::Constant(w.rows(), w.cols(), 1.0);
}

double dual_value(const Eigen::MatrixXd& w, const Eigen::VectorXd& lambda, const Eigen::VectorXd& mu,
                  double B) {
  return B * exponent(w, lambda, mu, B).array().exp().sum() + lambda.sum() + mu.sum();
}

double kkt_residual(const Eigen::MatrixXd& w, const Eigen::VectorXd& lambda, const Eigen::VectorXd& mu,
                    double B) {
  const Residuals r = residuals(exponent(w, lambda, mu, B).array().exp().matrix(), lambda, mu);
  return std::max(r.violation, r.slackness);
}

// Coordinate sweeps stall when a tight row and a tight column share one
// dominant cell: the dual is nearly flat along λ_i + c, μ_j - c. One projected
// Newton step on the free variables with backtracking; false when it finds no
// progress, so the caller falls back to a sweep.
bool newton_step(const Eigen::MatrixXd& w, double B, Eigen::VectorXd& lambda, Eigen::VectorXd& mu) {
  const Eigen::Index r = w.rows(), c = w.cols(), n = r + c;
  const Eigen::MatrixXd x = exponent(w, lambda, mu, B).array().exp().matrix();
  Eigen::VectorXd z(n), g(n);
  z << lambda, mu;
  g << Eigen::VectorXd::Ones(r) - x.rowwise().sum(), Eigen::VectorXd::Ones(c) - x.colwise().sum().transpose();

  // Variables at (or within ε of) zero and pushed outward stay fixed.
  double proj = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) proj = std::max(proj, std::abs(z[k] - std::max(0.0, z[k] - g[k])));
  const double active_eps = std::min(1e-6, proj);
  std::vector<Eigen::Index> free;
  for (Eigen::Index k = 0; k < n; ++k)
    if (!(z[k] <= active_eps && g[k] > 0.0)) free.push_back(k);
  if (free.empty()) return false;

  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(n, n);
  H.topLeftCorner(r, r) = x.rowwise().sum().asDiagonal();
  H.bottomRightCorner(c, c) = x.colwise().sum().transpose().asDiagonal();
  H.topRightCorner(r, c) = x;
  H.bottomLeftCorner(c, r) = x.transpose();
  H /= B;
  const auto f = static_cast<Eigen::Index>(free.size());
  Eigen::MatrixXd Hf(f, f);
  Eigen::VectorXd gf(f);
  for (Eigen::Index a = 0; a < f; ++a) {
    gf[a] = g[free[a]];
    for (Eigen::Index b = 0; b < f; ++b) Hf(a, b) = H(free[a], free[b]);
  }
  // The block Hessian is singular along (1, -1). A ridge that shrinks with
  // the gradient bounds the step there without losing fast local convergence.
  Hf.diagonal().array() += std::min(1.0, gf.norm()) / B + 1e-14;
  const Eigen::VectorXd df = Hf.ldlt().solve(-gf);
  if (!df.allFinite()) return false;
  const double slope = gf.dot(df);
  if (!(slope < 0.0)) return false;

  const double base = dual_value(w, lambda, mu, B);
  const double base_kkt = kkt_residual(w, lambda, mu, B);
  for (double t = 1.0; t > 1e-10; t *= 0.5) {
    Eigen::VectorXd trial = z;
    for (Eigen::Index a = 0; a < f; ++a) trial[free[a]] = std::max(0.0, z[free[a]] + t * df[a]);
    if (trial == z) return false;
    const Eigen::VectorXd tl = trial.head(r), tm = trial.tail(c);
    const double value = dual_value(w, tl, tm, B);
    const bool descent = value <= base + 1e-4 * t * slope;
    // At working precision the dual value stops resolving progress.
    const bool flat = value <= base + 4e-16 * std::abs(base) && kkt_residual(w, tl, tm, B) < base_kkt;
    if (descent || flat) {
      lambda = tl;
      mu = tm;
      return true;
    }
  }
  return false;
}

void check_matrix(const Eigen::MatrixXd& w) {
  if (w.size() == 0) throw Error(ErrorCode::DegenerateShape, "empty weight matrix");
  if (!w.allFinite() || (w.array() < 0.0).any())
    throw Error(ErrorCode::BadParams, "weights must be finite and nonnegative");
}

Eigen::MatrixXd shifted_matrix(const Eigen::MatrixXd& w, int fi, int fj, double delta) {
  if (fi < 0 || fi >= w.rows() || fj < 0 || fj >= w.cols())
    throw Error(ErrorCode::InvalidEdge, "perturbed cell out of range");
  Eigen::MatrixXd out = w;
  out(fi, fj) += delta;
  if (!(out(fi, fj) >= 0.0)) throw Error(ErrorCode::BadParams, "perturbation leaves the nonnegative orthant");
  return out;
}

struct ScaleRange {
  double lo, hi;
};

ScaleRange lp_scale_range(const Eigen::MatrixXd& w, double opt, double epsilon) {
  const double lo = epsilon * opt / (static_cast<double>(w.rows()) * std::log(static_cast<double>(w.cols())));
  return {lo, 2 * lo};
}

void check_shape(const Eigen::MatrixXd& w, double epsilon) {
  check_matrix(w);
  if (w.cols() < 2) throw Error(ErrorCode::DegenerateShape, "need at least two columns");
  if (!(epsilon > 0.0 && epsilon < 0.5)) throw Error(ErrorCode::BadParams, "epsilon must lie in (0, 1/2)");
}

RoundingTranscript finish_rounding(std::vector<int> proposal, int cols, const CounterRng& rng) {
  RoundingTranscript tr;
  tr.proposal = std::move(proposal);
  tr.candidates.assign(cols, {});
  for (int i = 0; i < static_cast<int>(tr.proposal.size()); ++i)
    if (tr.proposal[i] >= 0) tr.candidates[tr.proposal[i]].push_back(i);
  tr.choice.assign(cols, -1);
  for (int j = 0; j < cols; ++j) {
    const auto& c = tr.candidates[j];
    if (c.empty()) continue;
    tr.choice[j] = c[rng.below(Stream::RoundColumn, static_cast<std::uint64_t>(j), 0, c.size())];
    tr.matching.pairs.push_back({tr.choice[j], j});
  }
  std::sort(tr.matching.pairs.begin(), tr.matching.pairs.end());
  return tr;
}

std::vector<double> row_of(const Eigen::MatrixXd& x, Eigen::Index i) {
  std::vector<double> r(x.cols());
  for (Eigen::Index j = 0; j < x.cols(); ++j) r[j] = x(i, j);
  return r;
}

double matched_weight(const Eigen::MatrixXd& w, const BipartiteMatching& m) {
  double v = 0.0;
  for (auto [i, j] : m.pairs) v += w(i, j);
  return v;
}

}  // namespace

EntMatchingLP solve_lp_ent(const Eigen::MatrixXd& w, double B, const EntLpOptions& options) {
  check_matrix(w);
  if (!(B > 0.0) || !std::isfinite(B)) throw Error(ErrorCode::BadParams, "B must be positive");
  const Eigen::Index rows = w.rows(), cols = w.cols();
  EntMatchingLP lp;
  lp.B = B;
  lp.lambda = Eigen::VectorXd::Zero(rows);
  lp.mu = Eigen::VectorXd::Zero(cols);
  const Eigen::MatrixXd scaled = w / B - Eigen::MatrixXd::Constant(rows, cols, 1.0);

  // Coordinate sweeps warm-start projected Newton; sweeps resume whenever
  // Newton cannot make progress.
  constexpr long kWarmSweeps = 50;
  Residuals res;
  bool newton = false;
  for (lp.sweeps = 1; lp.sweeps <= options.max_sweeps; ++lp.sweeps) {
    if (lp.sweeps > kWarmSweeps) newton = newton_step(w, B, lp.lambda, lp.mu);
    if (!newton) {
      // Each update zeroes one block of the dual gradient, clipped at 0.
      for (Eigen::Index i = 0; i < rows; ++i)
        lp.lambda[i] = std::max(0.0, B * log_sum_exp(scaled.row(i) - lp.mu.transpose() / B));
      for (Eigen::Index j = 0; j < cols; ++j)
        lp.mu[j] = std::max(0.0, B * log_sum_exp(scaled.col(j) - lp.lambda / B));
    }
    lp.x = exponent(w, lp.lambda, lp.mu, B).array().exp().matrix();
    res = residuals(lp.x, lp.lambda, lp.mu);
    if (options.record_dual_trace)
      lp.dual_trace.push_back(B * lp.x.sum() + lp.lambda.sum() + lp.mu.sum());
    if (res.violation < options.tol && res.slackness < options.tol) break;
  }
  if (lp.sweeps > options.max_sweeps) {
    lp.sweeps = options.max_sweeps;
    throw Error(ErrorCode::NoConvergence,
                fmt::format("after {} sweeps: violation {:.3e}, slackness {:.3e}", lp.sweeps,
                            res.violation, res.slackness));
  }
  const Eigen::MatrixXd expo = exponent(w, lp.lambda, lp.mu, B);
  lp.max_violation = std::max(0.0, res.violation);
  lp.complementary_slackness = res.slackness;
  lp.stationarity_residual = (lp.x - expo.array().exp().matrix()).cwiseAbs().maxCoeff();
  // x log x = x · exponent, exact in the dual parametrisation.
  lp.objective = (w.array() * lp.x.array()).sum() - B * (lp.x.array() * expo.array()).sum();
  return lp;
}

RoundingTranscript round_matching(const Eigen::MatrixXd& x, const CounterRng& rng) {
  std::vector<int> p(x.rows(), -1);
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    const auto row = row_of(x, i);
    const std::size_t k = inverse_cdf(row, rng.uniform(Stream::RoundRow, i));
    p[i] = k < row.size() ? static_cast<int>(k) : -1;
  }
  return finish_rounding(std::move(p), static_cast<int>(x.cols()), rng);
}

CoupledRounding round_matching_coupled(const Eigen::MatrixXd& x, const Eigen::MatrixXd& x2,
                                       const CounterRng& rng) {
  if (x.rows() != x2.rows() || x.cols() != x2.cols())
    throw Error(ErrorCode::BadParams, "coupled rounding needs equal shapes");
  std::vector<int> p(x.rows(), -1), p2(x.rows(), -1);
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    const auto a = row_of(x, i), b = row_of(x2, i);
    const CoupledIndex c = couple_categorical(a, b, rng.uniform(Stream::RoundRow, i),
                                              rng.uniform(Stream::RoundRowCoupling, i, 0),
                                              rng.uniform(Stream::RoundRowCoupling, i, 1));
    p[i] = c.first < a.size() ? static_cast<int>(c.first) : -1;
    p2[i] = c.second < b.size() ? static_cast<int>(c.second) : -1;
  }
  const int cols = static_cast<int>(x.cols());
  return {finish_rounding(std::move(p), cols, rng), finish_rounding(std::move(p2), cols, rng)};
}

PlipMwbmResult plip_mwbm(const Eigen::MatrixXd& w, double epsilon, const CounterRng& rng,
                         const EntLpOptions& options) {
  check_shape(w, epsilon);
  PlipMwbmResult out;
  out.opt = hungarian_bipartite(w).value;
  if (!(out.opt > 0.0)) {
    out.zero_optimum = true;
    out.transcript.proposal.assign(w.rows(), -1);
    out.transcript.candidates.assign(w.cols(), {});
    out.transcript.choice.assign(w.cols(), -1);
    return out;
  }
  const ScaleRange r = lp_scale_range(w, out.opt, epsilon);
  out.B = rng.uniform(Stream::LpScale, 0, 0, r.lo, r.hi);
  out.lp = solve_lp_ent(w, out.B, options);
  out.transcript = round_matching(out.lp.x, rng);
  out.transcript.matching.value = matched_weight(w, out.transcript.matching);
  return out;
}

CoupledPlipMwbm plip_mwbm_coupled(const Eigen::MatrixXd& w, int fi, int fj, double delta,
                                  double epsilon, const CounterRng& rng,
                                  const EntLpOptions& options) {
  check_shape(w, epsilon);
  const Eigen::MatrixXd w2 = shifted_matrix(w, fi, fj, delta);
  CoupledPlipMwbm out;
  const double opt = hungarian_bipartite(w).value;
  const double opt2 = hungarian_bipartite(w2).value;
  if (!(opt > 0.0) || !(opt2 > 0.0)) {
    out.base = plip_mwbm(w, epsilon, rng, options);
    out.shifted = plip_mwbm(w2, epsilon, rng, options);
    out.scale_split = true;
    return out;
  }
  const ScaleRange r = lp_scale_range(w, opt, epsilon);
  const ScaleRange r2 = lp_scale_range(w2, opt2, epsilon);
  const CoupledReal b = couple_uniform_intervals(
      r.lo, r.hi, r2.lo, r2.hi, rng.uniform(Stream::LpScale, 0),
      rng.uniform(Stream::LpCoupling, 0, 0), rng.uniform(Stream::LpCoupling, 0, 1));
  out.scale_split = !b.equal;
  out.base.opt = opt;
  out.shifted.opt = opt2;
  out.base.B = b.first;
  out.shifted.B = b.second;
  out.base.lp = solve_lp_ent(w, b.first, options);
  out.shifted.lp = solve_lp_ent(w2, b.second, options);
  auto rounding = round_matching_coupled(out.base.lp.x, out.shifted.lp.x, rng);
  out.base.transcript = std::move(rounding.base);
  out.shifted.transcript = std::move(rounding.shifted);
  out.base.transcript.matching.value = matched_weight(w, out.base.transcript.matching);
  out.shifted.transcript.matching.value = matched_weight(w2, out.shifted.transcript.matching);
  return out;
}

StabilityCheck lp_stability_check(const Eigen::MatrixXd& w, int fi, int fj, double delta, double B,
                                  double tol) {
  const Eigen::MatrixXd w2 = shifted_matrix(w, fi, fj, delta);
  EntLpOptions opts;
  opts.tol = tol;
  const EntMatchingLP a = solve_lp_ent(w, B, opts);
  const EntMatchingLP b = solve_lp_ent(w2, B, opts);
  return {(a.x - b.x).cwiseAbs().sum(),
          std::sqrt(static_cast<double>(w.rows())) * std::abs(delta) / B};
}

std::vector<double> poisson_binomial_pmf(std::span<const double> y) {
  std::vector<double> pmf{1.0};
  pmf.reserve(y.size() + 1);
  for (double p : y) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::BadParams, "probabilities must lie in [0,1]");
    pmf.push_back(0.0);
    for (std::size_t k = pmf.size() - 1; k > 0; --k) pmf[k] = pmf[k] * (1.0 - p) + pmf[k - 1] * p;
    pmf[0] *= 1.0 - p;
  }
  return pmf;
}

double y_functional(std::span<const double> y) {
  const auto pmf = poisson_binomial_pmf(y);
  double total = 0.0;
  for (std::size_t k = 0; k < pmf.size(); ++k) total += pmf[k] / static_cast<double>(k + 1);
  return total;
}

}  // namespace lipgraph
