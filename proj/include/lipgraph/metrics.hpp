// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <functional>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "lipgraph/graph.hpp"

namespace lipgraph {

// Canonical multiset: entries sorted by edge id, multiplicities >= 1.
class EdgeMultiset {
 public:
  using Entry = std::pair<EdgeId, std::int32_t>;

  EdgeMultiset() = default;
  static EdgeMultiset from_edges(std::span<const EdgeId> ids);
  static EdgeMultiset from_walk(const Walk& walk);
  // Entries must already be canonical; throws BadParams otherwise.
  static EdgeMultiset from_entries(std::vector<Entry> entries);

  std::span<const Entry> entries() const { return entries_; }
  std::int32_t multiplicity(EdgeId e) const;
  std::size_t distinct() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  friend auto operator<=>(const EdgeMultiset&, const EdgeMultiset&) = default;
  friend bool operator==(const EdgeMultiset&, const EdgeMultiset&) = default;

 private:
  std::vector<Entry> entries_;
};

struct WeightedOutcome {
  EdgeMultiset outcome;
  double probability;
};

// Finite distribution over edge multisets, outcomes sorted and distinct.
class EdgeSetDistribution {
 public:
  EdgeSetDistribution() = default;
  static EdgeSetDistribution from_samples(std::span<const EdgeMultiset> samples);
  // Merges duplicates; total must be 1 within 1e-12.
  static EdgeSetDistribution from_outcomes(std::vector<WeightedOutcome> outcomes);

  const std::vector<WeightedOutcome>& outcomes() const { return outcomes_; }
  std::size_t size() const { return outcomes_.size(); }

 private:
  std::vector<WeightedOutcome> outcomes_;
};

double d_u(const EdgeMultiset& a, const EdgeMultiset& b);
double d_w(const EdgeMultiset& a, const WeightVector& w, const EdgeMultiset& b,
           const WeightVector& w2);

double tv_empirical(const EdgeSetDistribution& p, const EdgeSetDistribution& q);

inline constexpr std::size_t kMaxEmdSupport = 10000;
using OutcomeCost = std::function<double(const EdgeMultiset&, const EdgeMultiset&)>;

// Exact optimal transport cost between two finite distributions. Throws
// SupportTooLarge when either support exceeds kMaxEmdSupport.
double emd_empirical(const EdgeSetDistribution& p, const EdgeSetDistribution& q,
                     const OutcomeCost& cost);
double emd_weighted(const EdgeSetDistribution& p, const WeightVector& w,
                    const EdgeSetDistribution& q, const WeightVector& w2);
double emd_unweighted(const EdgeSetDistribution& p, const EdgeSetDistribution& q);

// One outcome per line: `prob<TAB>e:m e:m ...` with edges ascending.
void write_distribution(std::ostream& out, const EdgeSetDistribution& dist);
EdgeSetDistribution read_distribution(std::istream& in);

}  // namespace lipgraph
