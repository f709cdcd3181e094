// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "lipgraph/rng.hpp"

#include "lipgraph/errors.hpp"

namespace lipgraph {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

std::array<std::uint32_t, 4> block_with_key(std::uint64_t seed, std::uint32_t trial,
                                            Stream stream, std::uint64_t entity,
                                            std::uint32_t index) {
  if (entity > CounterRng::kMaxEntity) throw Error(ErrorCode::BadParams, "rng entity exceeds 48 bits");
  const std::array<std::uint32_t, 4> ctr = {
      static_cast<std::uint32_t>(entity),
      static_cast<std::uint32_t>(entity >> 32) | (static_cast<std::uint32_t>(stream) << 16),
      index,
      trial,
  };
  const std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed),
                                            static_cast<std::uint32_t>(seed >> 32)};
  return philox4x32(ctr, key);
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> c,
                                        std::array<std::uint32_t, 2> k) {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, c[0], hi0, lo0);
    mulhilo(kMul1, c[2], hi1, lo1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    k[0] += kWeyl0;
    k[1] += kWeyl1;
  }
  return c;
}

std::array<std::uint32_t, 4> CounterRng::block(Stream stream, std::uint64_t entity,
                                               std::uint32_t index) const {
  return block_with_key(seed_, trial_, stream, entity, index);
}

double CounterRng::uniform(Stream stream, std::uint64_t entity, std::uint32_t index) const {
  const auto r = block(stream, entity, index);
  const std::uint64_t bits = (static_cast<std::uint64_t>(r[0]) << 32) | r[1];
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

std::uint64_t CounterRng::below(Stream stream, std::uint64_t entity, std::uint32_t index,
                                std::uint64_t bound) const {
  if (bound == 0) throw Error(ErrorCode::BadParams, "below() needs a positive bound");
  // Rejection keeps the result exactly uniform. Retries re-key the seed so
  // they never alias another (entity, index) pair of this stream.
  const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
  for (std::uint64_t attempt = 0;; ++attempt) {
    const auto r = block_with_key(seed_ ^ (attempt * 0x9E3779B97F4A7C15ull), trial_, stream,
                                  entity, index);
    const std::uint64_t a = (static_cast<std::uint64_t>(r[0]) << 32) | r[1];
    if (a < limit) return a % bound;
    const std::uint64_t b = (static_cast<std::uint64_t>(r[2]) << 32) | r[3];
    if (b < limit) return b % bound;
  }
}

}  // namespace lipgraph
