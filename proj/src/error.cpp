#include "vchow/error.hpp"

namespace vchow {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kDivisionByZero: return "division_by_zero";
    case ErrorCode::kParse: return "parse_error";
    case ErrorCode::kSingularCurve: return "singular_curve";
    case ErrorCode::kUnsupported: return "unsupported_input";
    case ErrorCode::kBoundExceeded: return "bound_exceeded";
    case ErrorCode::kUndetermined: return "undetermined";
    case ErrorCode::kInternal: return "internal_error";
  }
  return "unknown";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return 2;
    case ErrorCode::kUnsupported:
    case ErrorCode::kSingularCurve:
    case ErrorCode::kInvalidArgument: return 3;
    case ErrorCode::kBoundExceeded: return 4;
    case ErrorCode::kUndetermined: return 5;
    default: return 1;
  }
}

}  // namespace vchow
