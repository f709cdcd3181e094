// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "lipgraph/algorithms.hpp"
#include "lipgraph/rng.hpp"

namespace lipgraph {

// Entropy-regularized fractional bipartite matching:
//   max Σ w_ij x_ij - B Σ x_ij log x_ij  s.t. row and column sums <= 1.
// The optimum is x_ij = exp((w_ij - λ_i - μ_j)/B - 1) with λ, μ >= 0.
struct EntMatchingLP {
  Eigen::MatrixXd x;
  Eigen::VectorXd lambda;  // rows
  Eigen::VectorXd mu;      // columns
  double B = 0.0;
  long sweeps = 0;
  double max_violation = 0.0;            // max over rows/cols of (sum - 1)+
  double stationarity_residual = 0.0;    // max |x - exp((w - λ - μ)/B - 1)|
  double complementary_slackness = 0.0;  // max λ_i |1 - row_i|, μ_j |1 - col_j|
  double objective = 0.0;                // primal, entropy term included
  std::vector<double> dual_trace;        // dual objective after each sweep, if requested
};

struct EntLpOptions {
  double tol = 1e-9;
  long max_sweeps = 100000;
  bool record_dual_trace = false;
};

// Minimises the dual: exact row and column block updates in log space, then
// projected Newton steps once warm. The dual value never increases across
// sweeps. Throws NoConvergence with residuals.
EntMatchingLP solve_lp_ent(const Eigen::MatrixXd& w, double B, const EntLpOptions& options = {});

struct RoundingTranscript {
  std::vector<int> proposal;               // p(i): column or -1 for ⊥
  std::vector<std::vector<int>> candidates;  // C_j, rows ascending
  std::vector<int> choice;                 // q(j): row or -1 when C_j is empty
  BipartiteMatching matching;
};

// One uniform per row picks p(i) by inverse CDF; one per column picks q(j)
// uniformly from C_j.
RoundingTranscript round_matching(const Eigen::MatrixXd& x, const CounterRng& rng);

// Rows of p are maximally coupled between x and x2; q shares its uniforms.
struct CoupledRounding {
  RoundingTranscript base;
  RoundingTranscript shifted;
};
CoupledRounding round_matching_coupled(const Eigen::MatrixXd& x, const Eigen::MatrixXd& x2,
                                       const CounterRng& rng);

struct PlipMwbmResult {
  RoundingTranscript transcript;
  EntMatchingLP lp;
  double B = 0.0;
  double opt = 0.0;
  bool zero_optimum = false;  // empty matching, nothing sampled
};

// B ~ Unif[εopt/(|U| ln|V|), 2εopt/(|U| ln|V|)], rows U, columns V.
// Throws DegenerateShape when |V| < 2.
PlipMwbmResult plip_mwbm(const Eigen::MatrixXd& w, double epsilon, const CounterRng& rng,
                         const EntLpOptions& options = {});

struct CoupledPlipMwbm {
  PlipMwbmResult base;
  PlipMwbmResult shifted;
  bool scale_split = false;
};
// w and w + δ at cell (fi, fj). B is maximally coupled, rounding as above.
CoupledPlipMwbm plip_mwbm_coupled(const Eigen::MatrixXd& w, int fi, int fj, double delta,
                                  double epsilon, const CounterRng& rng,
                                  const EntLpOptions& options = {});

struct StabilityCheck {
  double distance;  // ‖x - x'‖₁
  double bound;     // √|U| δ / B
};
StabilityCheck lp_stability_check(const Eigen::MatrixXd& w, int fi, int fj, double delta, double B,
                                  double tol = 1e-9);

// Law of the number of successes among independent Bernoulli(y_k).
std::vector<double> poisson_binomial_pmf(std::span<const double> y);
// Σ_k pmf(k) / (k + 1).
double y_functional(std::span<const double> y);

}  // namespace lipgraph
