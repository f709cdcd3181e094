// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "lipgraph/metrics.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "lipgraph/errors.hpp"
#include "lipgraph/transport.hpp"

namespace lipgraph {

EdgeMultiset EdgeMultiset::from_edges(std::span<const EdgeId> ids) {
  std::vector<EdgeId> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  EdgeMultiset out;
  for (EdgeId e : sorted) {
    if (!out.entries_.empty() && out.entries_.back().first == e) {
      ++out.entries_.back().second;
    } else {
      out.entries_.push_back({e, 1});
    }
  }
  return out;
}

EdgeMultiset EdgeMultiset::from_walk(const Walk& walk) {
  std::vector<EdgeId> ids;
  ids.reserve(walk.steps.size());
  for (const Step& s : walk.steps) ids.push_back(s.edge);
  return from_edges(ids);
}

EdgeMultiset EdgeMultiset::from_entries(std::vector<Entry> entries) {
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (entries[k].second < 1 || (k > 0 && entries[k - 1].first >= entries[k].first))
      throw Error(ErrorCode::BadParams, "multiset entries must be sorted with positive counts");
  }
  EdgeMultiset out;
  out.entries_ = std::move(entries);
  return out;
}

std::int32_t EdgeMultiset::multiplicity(EdgeId e) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{e, 0});
  return it != entries_.end() && it->first == e ? it->second : 0;
}

EdgeSetDistribution EdgeSetDistribution::from_samples(std::span<const EdgeMultiset> samples) {
  std::map<EdgeMultiset, std::size_t> counts;
  for (const auto& s : samples) ++counts[s];
  EdgeSetDistribution out;
  const double n = static_cast<double>(samples.size());
  for (auto& [set, c] : counts) out.outcomes_.push_back({set, static_cast<double>(c) / n});
  return out;
}

EdgeSetDistribution EdgeSetDistribution::from_outcomes(std::vector<WeightedOutcome> outcomes) {
  std::map<EdgeMultiset, double> merged;
  double total = 0.0;
  for (auto& o : outcomes) {
    if (!(o.probability >= 0.0)) throw Error(ErrorCode::BadParams, "negative probability");
    merged[o.outcome] += o.probability;
    total += o.probability;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw Error(ErrorCode::BadParams, fmt::format("probabilities sum to {}", total));
  EdgeSetDistribution out;
  for (auto& [set, p] : merged) out.outcomes_.push_back({set, p});
  return out;
}

namespace {

// Visits the union of two sorted entry lists; fn(edge, mult_a, mult_b).
template <class Fn>
void merge_entries(const EdgeMultiset& a, const EdgeMultiset& b, Fn&& fn) {
  auto ea = a.entries(), eb = b.entries();
  std::size_t i = 0, j = 0;
  while (i < ea.size() || j < eb.size()) {
    if (j == eb.size() || (i < ea.size() && ea[i].first < eb[j].first)) {
      fn(ea[i].first, ea[i].second, 0);
      ++i;
    } else if (i == ea.size() || eb[j].first < ea[i].first) {
      fn(eb[j].first, 0, eb[j].second);
      ++j;
    } else {
      fn(ea[i].first, ea[i].second, eb[j].second);
      ++i;
      ++j;
    }
  }
}

}  // namespace

double d_u(const EdgeMultiset& a, const EdgeMultiset& b) {
  double total = 0.0;
  merge_entries(a, b, [&](EdgeId, int ma, int mb) { total += std::abs(ma - mb); });
  return total;
}

double d_w(const EdgeMultiset& a, const WeightVector& w, const EdgeMultiset& b,
           const WeightVector& w2) {
  double total = 0.0;
  merge_entries(a, b, [&](EdgeId e, int ma, int mb) {
    const double xa = ma ? w[e] * ma : 0.0;
    const double xb = mb ? w2[e] * mb : 0.0;
    total += std::abs(xa - xb);
  });
  return total;
}

double tv_empirical(const EdgeSetDistribution& p, const EdgeSetDistribution& q) {
  const auto& a = p.outcomes();
  const auto& b = q.outcomes();
  double total = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].outcome < b[j].outcome)) {
      total += a[i++].probability;
    } else if (i == a.size() || b[j].outcome < a[i].outcome) {
      total += b[j++].probability;
    } else {
      total += std::abs(a[i++].probability - b[j++].probability);
    }
  }
  return 0.5 * total;
}

double emd_empirical(const EdgeSetDistribution& p, const EdgeSetDistribution& q,
                     const OutcomeCost& cost) {
  if (p.size() > kMaxEmdSupport || q.size() > kMaxEmdSupport)
    throw Error(ErrorCode::SupportTooLarge,
                fmt::format("supports {} and {} exceed {}", p.size(), q.size(), kMaxEmdSupport));
  if (p.size() == 0 || q.size() == 0) throw Error(ErrorCode::BadParams, "empty distribution");
  const auto& a = p.outcomes();
  const auto& b = q.outcomes();
  Eigen::MatrixXd c(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c(i, j) = cost(a[i].outcome, b[j].outcome);
  std::vector<double> supply, demand;
  for (const auto& o : a) supply.push_back(o.probability);
  for (const auto& o : b) demand.push_back(o.probability);
  return solve_transportation(supply, demand, c).cost;
}

double emd_weighted(const EdgeSetDistribution& p, const WeightVector& w,
                    const EdgeSetDistribution& q, const WeightVector& w2) {
  return emd_empirical(p, q, [&](const EdgeMultiset& x, const EdgeMultiset& y) {
    return d_w(x, w, y, w2);
  });
}

double emd_unweighted(const EdgeSetDistribution& p, const EdgeSetDistribution& q) {
  return emd_empirical(p, q, [](const EdgeMultiset& x, const EdgeMultiset& y) { return d_u(x, y); });
}

void write_distribution(std::ostream& out, const EdgeSetDistribution& dist) {
  for (const auto& o : dist.outcomes()) {
    fmt::print(out, "{:.17g}\t", o.probability);
    bool first = true;
    for (const auto& [e, m] : o.outcome.entries()) {
      fmt::print(out, "{}{}:{}", first ? "" : " ", e, m);
      first = false;
    }
    out << '\n';
  }
}

EdgeSetDistribution read_distribution(std::istream& in) {
  std::vector<WeightedOutcome> outcomes;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw Error(ErrorCode::ParseError, "missing tab in: " + line);
    WeightedOutcome o{};
    try {
      o.probability = std::stod(line.substr(0, tab));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad probability in: " + line);
    }
    std::istringstream items(line.substr(tab + 1));
    std::vector<EdgeMultiset::Entry> entries;
    std::string item;
    while (items >> item) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "bad entry " + item);
      try {
        entries.push_back({std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1))});
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad entry " + item);
      }
    }
    o.outcome = EdgeMultiset::from_entries(std::move(entries));
    outcomes.push_back(std::move(o));
  }
  return EdgeSetDistribution::from_outcomes(std::move(outcomes));
}

}  // namespace lipgraph
