// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "lipgraph/coupling.hpp"
#include "lipgraph/rng.hpp"
#include "lipgraph/trials.hpp"
#include "support.hpp"

using namespace lipgraph;

TEST_CASE("philox known answers") {
  using Block = std::array<std::uint32_t, 4>;
  CHECK(philox4x32({0, 0, 0, 0}, {0, 0}) ==
        Block{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        Block{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        Block{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("draws are pure functions of their address") {
  const CounterRng a(7, 3), b(7, 3);
  CHECK(a.uniform(Stream::MstWeight, 5, 1) == b.uniform(Stream::MstWeight, 5, 1));
  CHECK(a.uniform(Stream::MstWeight, 5, 1) != a.uniform(Stream::MstWeight, 5, 2));
  CHECK(a.uniform(Stream::MstWeight, 5) != a.uniform(Stream::MstCoupling, 5));
  CHECK(a.uniform(Stream::MstWeight, 5) != a.with_trial(4).uniform(Stream::MstWeight, 5));
  CHECK(a.uniform(Stream::MstWeight, 5) != CounterRng(8, 3).uniform(Stream::MstWeight, 5));

  DrawSequence seq(a, Stream::Generator, 9);
  CHECK(seq.uniform() == a.uniform(Stream::Generator, 9, 0));
  CHECK(seq.uniform() == a.uniform(Stream::Generator, 9, 1));
}

TEST_CASE("uniform and below have the right laws") {
  const CounterRng rng(11, 0);
  constexpr int kBins = 7, kDraws = 70000;
  std::vector<double> uni(kBins), low(kBins);
  for (std::uint32_t i = 0; i < kDraws; ++i) {
    const double u = rng.uniform(Stream::Generator, 0, i);
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    uni[static_cast<int>(u * kBins)] += 1;
    const auto k = rng.below(Stream::Generator, 1, i, kBins);
    REQUIRE(k < kBins);
    low[k] += 1;
  }
  const double expected = static_cast<double>(kDraws) / kBins;
  double chi_u = 0, chi_b = 0;
  for (int k = 0; k < kBins; ++k) {
    chi_u += (uni[k] - expected) * (uni[k] - expected) / expected;
    chi_b += (low[k] - expected) * (low[k] - expected) / expected;
  }
  CHECK(testing::chi_squared_p_value(chi_u, kBins - 1) > 1e-4);
  CHECK(testing::chi_squared_p_value(chi_b, kBins - 1) > 1e-4);
}

TEST_CASE("interval coupling keeps marginals and meets with probability 1 - tv") {
  const CounterRng rng(3, 0);
  const double a1 = 0.0, b1 = 1.0, a2 = 0.3, b2 = 1.5;
  // Overlap [0.3, 1]: tv = 1 - 0.7 / 1.2.
  const double tv = 1.0 - 0.7 / 1.2;
  constexpr int kDraws = 200000;
  int split = 0;
  std::vector<double> second_bins(6), first_bins(5);
  for (std::uint32_t i = 0; i < kDraws; ++i) {
    const double u = rng.uniform(Stream::MstWeight, 0, i);
    const auto c = couple_uniform_intervals(a1, b1, a2, b2, u, rng.uniform(Stream::MstCoupling, 0, i),
                                            rng.uniform(Stream::MstCoupling, 1, i));
    REQUIRE(c.first == a1 + (b1 - a1) * u);
    REQUIRE(c.second >= a2);
    REQUIRE(c.second <= b2);
    REQUIRE(c.equal == (c.first == c.second));
    if (!c.equal) ++split;
    second_bins[std::min(5, static_cast<int>((c.second - a2) / 0.2))] += 1;
  }
  const double p = static_cast<double>(split) / kDraws;
  CHECK(std::abs(p - tv) < 4.0 * std::sqrt(tv * (1 - tv) / kDraws));
  double chi = 0;
  for (double count : second_bins) {
    const double e = kDraws / 6.0;
    chi += (count - e) * (count - e) / e;
  }
  CHECK(testing::chi_squared_p_value(chi, 5) > 1e-4);
}

TEST_CASE("degenerate intervals behave as point masses") {
  const auto same = couple_uniform_intervals(2.0, 2.0, 2.0, 2.0, 0.4, 0.1, 0.9);
  CHECK(same.equal);
  CHECK(same.second == 2.0);
  const auto apart = couple_uniform_intervals(2.0, 2.0, 3.0, 3.0, 0.4, 0.1, 0.9);
  CHECK_FALSE(apart.equal);
  CHECK(apart.second == 3.0);
}

TEST_CASE("categorical coupling keeps marginals and meets with probability 1 - tv") {
  const std::vector<double> p{0.5, 0.3}, q{0.2, 0.3};  // remainders 0.2 and 0.5
  const std::vector<double> p_full{0.5, 0.3, 0.2}, q_full{0.2, 0.3, 0.5};
  double tv = 0;
  for (int k = 0; k < 3; ++k) tv += 0.5 * std::abs(p_full[k] - q_full[k]);
  const CounterRng rng(5, 1);
  constexpr int kDraws = 200000;
  std::vector<double> first(3), second(3);
  int split = 0;
  for (std::uint32_t i = 0; i < kDraws; ++i) {
    const double u = rng.uniform(Stream::RoundRow, 0, i);
    const auto c = couple_categorical(p, q, u, rng.uniform(Stream::RoundRowCoupling, 0, i),
                                      rng.uniform(Stream::RoundRowCoupling, 1, i));
    REQUIRE(c.first == inverse_cdf(p, u));
    first[c.first] += 1;
    second[c.second] += 1;
    if (c.first != c.second) ++split;
  }
  for (int k = 0; k < 3; ++k) {
    CHECK(std::abs(first[k] / kDraws - p_full[k]) < 4.0 * std::sqrt(0.25 / kDraws));
    CHECK(std::abs(second[k] / kDraws - q_full[k]) < 4.0 * std::sqrt(0.25 / kDraws));
  }
  CHECK(std::abs(static_cast<double>(split) / kDraws - tv) < 4.0 * std::sqrt(0.25 / kDraws));
}

TEST_CASE("inverse cdf boundaries") {
  const std::vector<double> probs{0.25, 0.25};
  CHECK(inverse_cdf(probs, 0.0) == 0);
  CHECK(inverse_cdf(probs, 0.25) == 1);
  CHECK(inverse_cdf(probs, 0.49) == 1);
  CHECK(inverse_cdf(probs, 0.5) == 2);
}

TEST_CASE("run_trials is identical serial and parallel and rethrows the lowest failure") {
  auto fn = [](std::uint32_t t) { return CounterRng(99, t).uniform(Stream::Generator, 0); };
  CHECK(run_trials(5000, Execution::Serial, fn) == run_trials(5000, Execution::Parallel, fn));
  auto failing = [](std::uint32_t t) -> int {
    if (t == 37 || t == 900) throw std::runtime_error(std::to_string(t));
    return 0;
  };
  for (auto exec : {Execution::Serial, Execution::Parallel}) {
    try {
      run_trials(2000, exec, failing);
      FAIL("expected a throw");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()) == "37");
    }
  }
}
