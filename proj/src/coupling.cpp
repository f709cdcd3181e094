// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "lipgraph/coupling.hpp"

#include <algorithm>
#include <vector>

namespace lipgraph {

CoupledReal couple_uniform_intervals(double a1, double b1, double a2, double b2, double u,
                                     double u_accept, double u_residual) {
  const double x = a1 + u * (b1 - a1);
  const bool point1 = !(b1 > a1);
  const bool point2 = !(b2 > a2);
  if (point1 && point2) return {x, a2, x == a2};
  if (point1 || point2) {
    // Mutually singular laws: the coupling can never agree.
    return {x, a2 + u_residual * (b2 - a2), false};
  }

  const double p1 = 1.0 / (b1 - a1);
  const double p2 = 1.0 / (b2 - a2);
  if (x >= a2 && x < b2 && u_accept * p1 < p2) return {x, x, true};

  // Residual law of the second coordinate: density p2 - min(p1, p2) on the
  // overlap and p2 elsewhere in [a2, b2).
  const double left_hi = std::clamp(a1, a2, b2);
  const double right_lo = std::clamp(b1, a2, b2);
  const double overlap_lo = std::max(a1, a2);
  const double overlap_hi = std::min(b1, b2);
  const double m_left = p2 * (left_hi - a2);
  const double m_overlap =
      overlap_hi > overlap_lo ? std::max(0.0, p2 - p1) * (overlap_hi - overlap_lo) : 0.0;
  const double m_right = p2 * (b2 - right_lo);
  const double total = m_left + m_overlap + m_right;
  if (!(total > 0.0)) return {x, x, true};

  double r = u_residual * total;
  double y;
  if (r < m_left) {
    y = a2 + r / p2;
  } else if ((r -= m_left) < m_overlap) {
    y = overlap_lo + r / (p2 - p1);
  } else {
    r -= m_overlap;
    y = std::min(right_lo + r / p2, b2);
  }
  return {x, y, y == x};
}

std::size_t inverse_cdf(std::span<const double> probs, double u) {
  double cum = 0.0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    cum += probs[k];
    if (u < cum) return k;
  }
  return probs.size();
}

CoupledIndex couple_categorical(std::span<const double> p, std::span<const double> q, double u,
                                double u_accept, double u_residual) {
  const std::size_t k = p.size();
  std::vector<double> pf(p.begin(), p.end());
  std::vector<double> qf(q.begin(), q.end());
  double sp = 0.0, sq = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    sp += pf[i];
    sq += qf[i];
  }
  pf.push_back(std::max(0.0, 1.0 - sp));
  qf.push_back(std::max(0.0, 1.0 - sq));

  const std::size_t first = inverse_cdf(p, u);
  if (pf[first] > 0.0 && u_accept * pf[first] < qf[first]) return {first, first};

  std::vector<double> residual(k + 1);
  double total = 0.0;
  for (std::size_t i = 0; i <= k; ++i) {
    residual[i] = std::max(0.0, qf[i] - pf[i]);
    total += residual[i];
  }
  if (!(total > 0.0)) return {first, first};
  double r = u_residual * total;
  for (std::size_t i = 0; i <= k; ++i) {
    if (r < residual[i]) return {first, i};
    r -= residual[i];
  }
  // Rounding left r at the top edge; take the last outcome with residual mass.
  std::size_t last = k;
  while (residual[last] == 0.0) --last;
  return {first, last};
}

}  // namespace lipgraph
