#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qlat {

enum class ErrorCode {
  NotSymmetric,
  NotPositiveDefinite,
  NotIntegral,
  BoundTooLargeForBudget,
  SearchBudgetExceeded,
  InvalidParameter,
  IndexOutOfRange,
  NonIntegralResult,
  MalformedSpec,
  PreconditionViolated,
  RankUnsupported,
  SyntaxError,
  ArityMismatch,
  CounterexampleFound,
  InvalidFormat,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when a glue construction would leave the integral world; carries the
/// offending norm of the glued vector.
class NonIntegralError : public Error {
 public:
  NonIntegralError(const mpq_class& norm, const std::string& what)
      : Error(ErrorCode::NonIntegralResult, what), norm_(norm) {}
  const mpq_class& norm() const noexcept { return norm_; }

 private:
  mpq_class norm_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorCode::SyntaxError, "syntax error at " + std::to_string(line) + ":" +
                                          std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace qlat
