// Copyright (c) vafkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vafkit {

// Numeric values are part of the C ABI (see vafkit.h); append only.
enum class ErrorCode : int {
  UnknownArgument = 1,
  UnknownValue = 2,
  DuplicateDeclaration = 3,
  MultivaluedCycle = 4,
  UnusedValue = 5,
  CyclicFramework = 6,
  InvalidAudience = 7,
  TooManyValues = 8,
  TooManyEdges = 9,
  TooLarge = 10,
  InvalidOrientation = 11,
  CyclicOrientation = 12,
  ValueWidthExceeded = 13,
  NotBipartite = 14,
  LiftingFailed = 15,
  MalformedClause = 16,
  NotMonotoneSplit = 17,
  TooManyVariables = 18,
  InvalidDecomposition = 19,
  SyntaxError = 20,
  InvalidInput = 21,
  IoError = 22,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failure in a text document; line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorCode::SyntaxError,
              std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace vafkit
