// Copyright 2026 The liyorke Authors.
// SPDX-License-Identifier: Apache-2.0

#include "error.hpp"

namespace liyorke {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::InsufficientPrefix: return "insufficient prefix";
    case ErrorCode::NotInSubset: return "not in subset";
    case ErrorCode::GeneratorExhausted: return "generator exhausted";
    case ErrorCode::InvalidRatio: return "invalid ratio";
    case ErrorCode::InvalidDigit: return "invalid digit";
    case ErrorCode::Overlap: return "overlap";
    case ErrorCode::ParameterOutOfRange: return "parameter out of range";
    case ErrorCode::UndefinedRegion: return "undefined region";
    case ErrorCode::OutOfDomain: return "out of domain";
    case ErrorCode::EmptyInput: return "empty input";
    case ErrorCode::DegenerateFit: return "degenerate fit";
    case ErrorCode::TooFewCheckpoints: return "too few checkpoints";
    case ErrorCode::Parse: return "parse error";
  }
  return "unknown error";
}

}  // namespace liyorke
