// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <exception>
#include <vector>

namespace lipgraph {

enum class Execution { Serial, Parallel };

// Evaluates fn(trial) for trial in [0, count) into a vector indexed by trial.
// Each trial is a pure function of its index, so both modes return identical
// vectors; callers reduce serially in index order. When trials throw, the
// exception of the lowest failing trial is rethrown.
template <class Fn>
auto run_trials(std::uint32_t count, Execution exec, Fn&& fn) {
  using Result = decltype(fn(std::uint32_t{0}));
  std::vector<Result> out(count);
  if (exec == Execution::Serial) {
    for (std::uint32_t t = 0; t < count; ++t) out[t] = fn(t);
    return out;
  }
  std::vector<std::exception_ptr> errors(count);
  const std::int64_t n = count;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t t = 0; t < n; ++t) {
    try {
      out[t] = fn(static_cast<std::uint32_t>(t));
    } catch (...) {
      errors[t] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace lipgraph
