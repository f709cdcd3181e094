// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>

namespace lipgraph {

// Philox4x32-10 block function.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

// Draw domains. Each algorithm owns its domains so that coupled runs of the
// same algorithm see the same uniforms for the same (domain, entity, index).
enum class Stream : std::uint16_t {
  MstWeight = 1,
  MstCoupling,
  PlipMstScale,
  PlipMstWeight,
  PlipMstCoupling,
  RecSplit,
  RecSlack,
  RecPivot,
  SpGamma,
  GadgetScale,
  GadgetUniform,
  GadgetCoupling,
  MwmScale,
  MwmPermutation,
  LpScale,
  LpCoupling,
  RoundRow,
  RoundRowCoupling,
  RoundColumn,
  Generator,
  Bootstrap,
};

// Stateless random source. A draw is a pure function of
// (seed, trial, stream, entity, index), so the order in which draws are
// requested never matters. Entities must fit in 48 bits.
class CounterRng {
 public:
  static constexpr std::uint64_t kMaxEntity = (std::uint64_t{1} << 48) - 1;

  CounterRng(std::uint64_t seed, std::uint32_t trial) : seed_(seed), trial_(trial) {}

  std::uint64_t seed() const { return seed_; }
  std::uint32_t trial() const { return trial_; }

  std::array<std::uint32_t, 4> block(Stream stream, std::uint64_t entity,
                                     std::uint32_t index = 0) const;

  // Uniform on [0, 1) with 53 random bits.
  double uniform(Stream stream, std::uint64_t entity, std::uint32_t index = 0) const;

  double uniform(Stream stream, std::uint64_t entity, std::uint32_t index, double lo,
                 double hi) const {
    return lo + (hi - lo) * uniform(stream, entity, index);
  }

  // Uniform integer in [0, bound). bound > 0.
  std::uint64_t below(Stream stream, std::uint64_t entity, std::uint32_t index,
                      std::uint64_t bound) const;

  CounterRng with_trial(std::uint32_t trial) const { return {seed_, trial}; }

 private:
  std::uint64_t seed_;
  std::uint32_t trial_;
};

// Sequential view over one (stream, entity) for code that consumes an
// unknown number of draws, such as instance generators.
class DrawSequence {
 public:
  DrawSequence(const CounterRng& rng, Stream stream, std::uint64_t entity)
      : rng_(rng), stream_(stream), entity_(entity) {}

  double uniform() { return rng_.uniform(stream_, entity_, next_++); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t below(std::uint64_t bound) { return rng_.below(stream_, entity_, next_++, bound); }

 private:
  CounterRng rng_;
  Stream stream_;
  std::uint64_t entity_;
  std::uint32_t next_ = 0;
};

}  // namespace lipgraph
