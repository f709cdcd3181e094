// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <bit>
#include <cmath>
#include <map>

#include "lipgraph/errors.hpp"
#include "lipgraph/plip_mwbm.hpp"
#include "lipgraph/trials.hpp"
#include "support.hpp"

using namespace lipgraph;

namespace {

double primal(const Eigen::MatrixXd& w, const Eigen::MatrixXd& x, double B) {
  double v = 0;
  for (int i = 0; i < w.rows(); ++i)
    for (int j = 0; j < w.cols(); ++j)
      if (x(i, j) > 0) v += w(i, j) * x(i, j) - B * x(i, j) * std::log(x(i, j));
  return v;
}

double dual(const Eigen::MatrixXd& w, const Eigen::VectorXd& lambda, const Eigen::VectorXd& mu, double B) {
  double v = lambda.sum() + mu.sum();
  for (int i = 0; i < w.rows(); ++i)
    for (int j = 0; j < w.cols(); ++j) v += B * std::exp((w(i, j) - lambda(i) - mu(j)) / B - 1);
  return v;
}

// Exact marginals Pr[(i, j) matched] by enumerating every proposal vector
// and every column choice.
Eigen::MatrixXd exact_marginals(const Eigen::MatrixXd& x) {
  const int rows = static_cast<int>(x.rows()), cols = static_cast<int>(x.cols());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(rows, cols);
  std::vector<int> p(rows, 0);
  while (true) {
    double prob = 1;
    for (int i = 0; i < rows; ++i)
      prob *= p[i] < cols ? x(i, p[i]) : std::max(0.0, 1.0 - x.row(i).sum());
    if (prob > 0) {
      for (int j = 0; j < cols; ++j) {
        int size = 0;
        for (int i = 0; i < rows; ++i) size += p[i] == j;
        for (int i = 0; i < rows; ++i)
          if (p[i] == j) out(i, j) += prob / size;
      }
    }
    int k = 0;
    while (k < rows && ++p[k] > cols) p[k++] = 0;
    if (k == rows) break;
  }
  return out;
}

}  // namespace

TEST_CASE("one by one closed form") {
  for (double w : {0.0, 0.5, 0.99, 1.5, 3.0}) {
    const double B = 1.0;
    Eigen::MatrixXd m(1, 1);
    m << w;
    const auto lp = solve_lp_ent(m, B);
    CHECK(lp.x(0, 0) == doctest::Approx(std::min(1.0, std::exp(w / B - 1))).epsilon(1e-8));
    const double total = std::max(0.0, w - B);
    CHECK(lp.lambda(0) + lp.mu(0) == doctest::Approx(total).epsilon(1e-7));
  }
}

TEST_CASE("symmetric weights give a symmetric solution") {
  Eigen::MatrixXd w(2, 2);
  w << 3, 1, 1, 3;
  const auto lp = solve_lp_ent(w, 0.5);
  CHECK(lp.x(0, 0) == doctest::Approx(lp.x(1, 1)).epsilon(1e-8));
  CHECK(lp.x(0, 1) == doctest::Approx(lp.x(1, 0)).epsilon(1e-8));
  CHECK(lp.x.row(0).sum() == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("random instances satisfy optimality conditions and strong duality") {
  lipgraph::testing::Rng rng(1);
  for (int round = 0; round < 200; ++round) {
    const int rows = lipgraph::testing::uniform_int(rng, 1, 5);
    const int cols = lipgraph::testing::uniform_int(rng, 1, 6);
    const auto w = lipgraph::testing::random_matrix(rng, rows, cols, 3.0);
    const double B = lipgraph::testing::uniform_real(rng, 0.02, 1.0);
    EntLpOptions opts;
    opts.record_dual_trace = true;
    const auto lp = solve_lp_ent(w, B, opts);
    CHECK(lp.max_violation <= 1e-7);
    CHECK(lp.complementary_slackness <= 1e-7);
    CHECK(lp.stationarity_residual <= 1e-7);
    CHECK((lp.lambda.array() >= 0).all());
    CHECK((lp.mu.array() >= 0).all());
    const double p = primal(w, lp.x, B), d = dual(w, lp.lambda, lp.mu, B);
    CHECK(p == doctest::Approx(lp.objective).epsilon(1e-9));
    CHECK(std::abs(p - d) <= 1e-6 * std::max(1.0, std::abs(d)));
    for (std::size_t k = 1; k < lp.dual_trace.size(); ++k)
      CHECK(lp.dual_trace[k] <= lp.dual_trace[k - 1] + 1e-12 * std::abs(lp.dual_trace[k - 1]));
    // No random feasible point does better.
    for (int trial = 0; trial < 20; ++trial) {
      Eigen::MatrixXd y = lipgraph::testing::random_matrix(rng, rows, cols);
      const double scale = std::max(y.rowwise().sum().maxCoeff(), y.colwise().sum().maxCoeff());
      y /= scale;
      CHECK(primal(w, y, B) <= lp.objective + 1e-9);
    }
  }
}

TEST_CASE("stability under a single-cell perturbation") {
  lipgraph::testing::Rng rng(2);
  for (int round = 0; round < 100; ++round) {
    const int rows = lipgraph::testing::uniform_int(rng, 1, 5);
    const int cols = lipgraph::testing::uniform_int(rng, 2, 6);
    const auto w = lipgraph::testing::random_matrix(rng, rows, cols, 2.0);
    const double B = lipgraph::testing::uniform_real(rng, 0.05, 1.0);
    const double delta = B * lipgraph::testing::uniform_real(rng, 1e-4, 0.5);
    const auto c = lp_stability_check(w, lipgraph::testing::uniform_int(rng, 0, rows - 1),
                                      lipgraph::testing::uniform_int(rng, 0, cols - 1), delta, B);
    CHECK(c.distance <= c.bound + 1e-7);
    CHECK(c.bound == doctest::Approx(std::sqrt(static_cast<double>(rows)) * delta / B));
  }
}

TEST_CASE("poisson binomial law and the Y functional") {
  const std::vector<double> half{0.5, 0.5};
  const auto pmf = poisson_binomial_pmf(half);
  REQUIRE(pmf.size() == 3);
  CHECK(pmf[0] == doctest::Approx(0.25));
  CHECK(pmf[1] == doctest::Approx(0.5));
  CHECK(poisson_binomial_pmf(std::vector<double>{}) == std::vector<double>{1.0});
  CHECK(y_functional(std::vector<double>{1.0}) == doctest::Approx(0.5));
  CHECK(y_functional(std::vector<double>{0.0, 0.0}) == doctest::Approx(1.0));
  lipgraph::testing::Rng rng(3);
  for (int round = 0; round < 200; ++round) {
    std::vector<double> y(lipgraph::testing::uniform_int(rng, 1, 10));
    for (auto& v : y) v = lipgraph::testing::uniform_real(rng, 0, 1);
    std::vector<double> brute(y.size() + 1);
    for (std::uint32_t mask = 0; mask < (1u << y.size()); ++mask) {
      double p = 1;
      for (std::size_t k = 0; k < y.size(); ++k) p *= (mask >> k & 1) ? y[k] : 1 - y[k];
      brute[std::popcount(mask)] += p;
    }
    const auto got = poisson_binomial_pmf(y);
    double fn = 0;
    for (std::size_t k = 0; k < brute.size(); ++k) {
      CHECK(got[k] == doctest::Approx(brute[k]).epsilon(1e-12));
      fn += brute[k] / static_cast<double>(k + 1);
    }
    CHECK(y_functional(y) == doctest::Approx(fn).epsilon(1e-12));
  }
}

TEST_CASE("rounding marginals match exhaustive enumeration") {
  lipgraph::testing::Rng rng(4);
  for (int round = 0; round < 6; ++round) {
    const int rows = lipgraph::testing::uniform_int(rng, 1, 3);
    const int cols = lipgraph::testing::uniform_int(rng, 1, 3);
    auto w = lipgraph::testing::random_matrix(rng, rows, cols, 2.0);
    const auto x = solve_lp_ent(w, 0.4).x;
    const auto exact = exact_marginals(x);
    constexpr int kRuns = 100000;
    Eigen::MatrixXd counts = Eigen::MatrixXd::Zero(rows, cols);
    for (std::uint32_t t = 0; t < kRuns; ++t) {
      const auto tr = round_matching(x, CounterRng(round, t));
      for (auto [i, j] : tr.matching.pairs) counts(i, j) += 1;
      for (int j = 0; j < cols; ++j) {
        REQUIRE(tr.choice[j] == (tr.candidates[j].empty() ? -1 : tr.choice[j]));
        if (tr.choice[j] >= 0) REQUIRE(tr.proposal[tr.choice[j]] == j);
      }
    }
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        const double p = exact(i, j), sigma = std::sqrt(std::max(p * (1 - p), 1e-12) / kRuns);
        CHECK(std::abs(counts(i, j) / kRuns - p) <= 4.5 * sigma + 1e-9);
      }
  }
}

TEST_CASE("full algorithm: scale range, shape errors and zero optimum") {
  lipgraph::testing::Rng rng(5);
  const auto w = lipgraph::testing::random_matrix(rng, 3, 4);
  const double opt = hungarian_bipartite(w).value, eps = 0.2;
  const double lo = eps * opt / (3 * std::log(4.0));
  for (std::uint32_t t = 0; t < 50; ++t) {
    const auto r = plip_mwbm(w, eps, CounterRng(6, t));
    CHECK(r.B >= lo);
    CHECK(r.B <= 2 * lo);
    CHECK(r.opt == doctest::Approx(opt));
  }
  CHECK_THROWS_AS(plip_mwbm(Eigen::MatrixXd::Ones(3, 1), eps, CounterRng(1, 0)), Error);
  const auto zero = plip_mwbm(Eigen::MatrixXd::Zero(2, 3), eps, CounterRng(1, 0));
  CHECK(zero.zero_optimum);
  CHECK(zero.transcript.matching.pairs.empty());
}

TEST_CASE("coupled base run equals the plain run; parallel equals serial") {
  lipgraph::testing::Rng rng(7);
  const auto w = lipgraph::testing::random_matrix(rng, 3, 3);
  for (std::uint32_t t = 0; t < 100; ++t) {
    const CounterRng crng(8, t);
    const auto c = plip_mwbm_coupled(w, 1, 2, 0.05, 0.2, crng);
    CHECK(c.base.transcript.matching.pairs == plip_mwbm(w, 0.2, crng).transcript.matching.pairs);
  }
  auto runs = [&](Execution exec) {
    return run_trials(300, exec, [&](std::uint32_t t) {
      return plip_mwbm(w, 0.2, CounterRng(9, t)).transcript.matching.pairs;
    });
  };
  CHECK(runs(Execution::Serial) == runs(Execution::Parallel));
}
