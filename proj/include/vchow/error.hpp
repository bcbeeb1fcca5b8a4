#pragma once

#include <stdexcept>
#include <string>

namespace vchow {

enum class ErrorCode {
  kInvalidArgument,
  kDivisionByZero,
  kParse,
  kSingularCurve,
  kUnsupported,
  kBoundExceeded,
  kUndetermined,
  kInternal,
};

const char* error_code_name(ErrorCode code);

/// Exit status used by the command-line tool for each error class.
int exit_code_for(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(ErrorCode::kParse, what), line_(line), column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace vchow
