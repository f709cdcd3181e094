// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace lipgraph {

enum class ErrorCode {
  BadParams,
  ParseError,
  DisconnectedGraph,
  TooLarge,
  SelfLoop,
  NotContractible,
  Unreachable,
  SupportTooLarge,
  MalformedWalk,
  NoConvergence,
  DegenerateShape,
  InvalidEdge,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lipgraph
