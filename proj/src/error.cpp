#include "genfrac/error.hpp"

#include <cstdio>

namespace genfrac {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPositiveAlpha: return "NonPositiveAlpha";
    case ErrorCode::NonPositiveRho: return "NonPositiveRho";
    case ErrorCode::BadDomain: return "BadDomain";
    case ErrorCode::EtaTooSmall: return "EtaTooSmall";
    case ErrorCode::IncompatibleComposition: return "IncompatibleComposition";
    case ErrorCode::MismatchedRhoOrSide: return "MismatchedRhoOrSide";
    case ErrorCode::XOutOfDomain: return "XOutOfDomain";
    case ErrorCode::MuOutOfRange: return "MuOutOfRange";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::UnsupportedReduction: return "UnsupportedReduction";
    case ErrorCode::ArgsOutOfRange: return "ArgsOutOfRange";
    case ErrorCode::PoleArgument: return "PoleArgument";
    case ErrorCode::NonPositiveArgument: return "NonPositiveArgument";
    case ErrorCode::ExponentOutOfRange: return "ExponentOutOfRange";
    case ErrorCode::EigenFailure: return "EigenFailure";
    case ErrorCode::NonFiniteIntegrand: return "NonFiniteIntegrand";
    case ErrorCode::NonIntegrableSingularity: return "NonIntegrableSingularity";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::DivergentTail: return "DivergentTail";
    case ErrorCode::DivergentConstant: return "DivergentConstant";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPositiveAlpha:
    case ErrorCode::NonPositiveRho:
    case ErrorCode::BadDomain:
    case ErrorCode::EtaTooSmall:
    case ErrorCode::IncompatibleComposition:
    case ErrorCode::MismatchedRhoOrSide:
    case ErrorCode::XOutOfDomain:
    case ErrorCode::MuOutOfRange:
    case ErrorCode::PreconditionViolated:
    case ErrorCode::UnsupportedReduction:
    case ErrorCode::ArgsOutOfRange:
    case ErrorCode::PoleArgument:
    case ErrorCode::NonPositiveArgument:
    case ErrorCode::ExponentOutOfRange:
    case ErrorCode::ParseError:
      return true;
    default:
      return false;
  }
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace genfrac
