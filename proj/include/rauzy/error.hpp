#pragma once

#include <stdexcept>
#include <string>

namespace rauzy {

enum class ErrorKind {
  Parse,
  InvalidArgument,
  NoSeedFound,
  NegativeEntry,
  DivideByZeroPoly,
  DegreeTooLarge,
  NoConvergence,
  IndeterminateClassification,
  IllConditioned,
  DimensionMismatch,
  NotBalanced,
  MatrixMismatch,
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

// All library failures are reported through this one exception type; the
// kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rauzy
