#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace purecoeffs {

enum class ErrorCode {
  InvalidArgument,
  NotDivisible,
  DegreeTooHigh,
  NotStrictlyIncreasing,
  EmptyRow,
  ZeroBetaZero,
  ParseError,
  NegativeEntry,
  InvalidCodim,
  NonzeroD0,
  NonzeroMinDegree,
  NotInCone,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. The code distinguishes mathematical
/// negatives (NotInCone) from malformed input.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace purecoeffs
