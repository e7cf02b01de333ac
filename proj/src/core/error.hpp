// Copyright 2026 The liyorke Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace liyorke {

/// Failure categories shared by every module. The C API maps these one to
/// one onto `ly_status` values.
enum class ErrorCode {
  InvalidArgument,
  InsufficientPrefix,
  NotInSubset,
  GeneratorExhausted,
  InvalidRatio,
  InvalidDigit,
  Overlap,
  ParameterOutOfRange,
  UndefinedRegion,
  OutOfDomain,
  EmptyInput,
  DegenerateFit,
  TooFewCheckpoints,
  Parse,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace liyorke
