#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace entred {

enum class ErrorKind {
  Empty,
  NegativeMass,
  NotNormalized,
  Unreachable,
  BadM,
  TooLarge,
  BadPartition,
  ZeroMinimum,
  RatioViolated,
  BadRho,
  MarginalMismatch,
  ParseError,
};

std::string_view error_name(ErrorKind kind) noexcept;

/// Validation failure raised by every library entry point. The CLI maps it to
/// exit status 1; anything else escaping is treated as an internal error.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace entred
