// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace edgenorm {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Raised when an oracle is handed the zero ideal (no generators).
class ZeroIdealError : public Error {
 public:
  ZeroIdealError() : Error("operation undefined on the zero ideal") {}
};

/// Raised when an oracle is handed the unit ideal (zero vector generator).
class UnitIdealError : public Error {
 public:
  UnitIdealError() : Error("operation undefined on the unit ideal") {}
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class InvalidGraph : public Error {
 public:
  using Error::Error;
};

/// Input could not be parsed; `where` names the offending location.
class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& what)
      : Error(where + ": " + what), where_(std::move(where)) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// A configured search bound (box volume or wall clock) was exceeded.
class ResourceCapError : public Error {
 public:
  using Error::Error;
};

}  // namespace edgenorm
