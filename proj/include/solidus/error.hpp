#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace solidus {

enum class ErrorCode {
  DivisionByZero,
  ZeroScalar,
  NotIdempotent,
  NotAboveUnity,
  NotZeroless,
  NotLimited,
  DegenerateDomain,
  EmptySet,
  NotStrictlyOrdered,
  PreconditionFailed,
  UnknownFormula,
  UnknownCheck,
  SyntaxError,
  UnknownIdentifier,
  EvalError,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every solidus operation. `code()` identifies the
/// failed contract; the message is human readable.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Error carrying a 1-based source column (parser and evaluator).
class SourceError : public Error {
 public:
  SourceError(ErrorCode code, std::size_t column, const std::string& what)
      : Error(code, what), column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

}  // namespace solidus
