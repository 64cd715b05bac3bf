#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace genfrac {

enum class ErrorCode {
  // parameter validation
  NonPositiveAlpha,
  NonPositiveRho,
  BadDomain,
  EtaTooSmall,
  IncompatibleComposition,
  MismatchedRhoOrSide,
  XOutOfDomain,
  MuOutOfRange,
  PreconditionViolated,
  UnsupportedReduction,
  ArgsOutOfRange,
  // special functions
  PoleArgument,
  NonPositiveArgument,
  // numerics
  ExponentOutOfRange,
  EigenFailure,
  NonFiniteIntegrand,
  NonIntegrableSingularity,
  DepthExceeded,
  DivergentTail,
  DivergentConstant,
  // text input
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for errors caused by the caller's parameters rather than by the numerics.
bool is_validation_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Compact rendering of a number for error messages.
std::string format_number(double v);

}  // namespace genfrac
