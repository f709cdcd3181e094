// Copyright 2026 The lipgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "lipgraph/errors.hpp"

namespace lipgraph {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::NotContractible: return "NotContractible";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::SupportTooLarge: return "SupportTooLarge";
    case ErrorCode::MalformedWalk: return "MalformedWalk";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DegenerateShape: return "DegenerateShape";
    case ErrorCode::InvalidEdge: return "InvalidEdge";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace lipgraph
