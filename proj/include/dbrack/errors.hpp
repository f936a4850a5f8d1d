#pragma once

#include <stdexcept>
#include <string>

namespace dbrack {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Elements or maps referring to generators outside the ambient table.
struct AlgebraMismatch : Error {
  using Error::Error;
};

// Broken structural invariant, e.g. a bracket table that is not antisymmetric.
struct InvariantViolation : Error {
  using Error::Error;
};

// Operation not defined for the given bimodule kind or twist.
struct KindError : Error {
  using Error::Error;
};

struct ArgumentError : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line;
  int col;
  ParseError(const std::string& msg, int l, int c)
      : Error(std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), col(c) {}
};

}  // namespace dbrack
