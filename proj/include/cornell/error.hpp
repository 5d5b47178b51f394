#pragma once

#include <stdexcept>
#include <string>

namespace cornell {

enum class ErrorCode {
  kDomain = 1,
  kUsage,
  kRange,
  kBracket,
  kNonConvergence,
  kNumerical,
  kValidation,
  kNotEigenvalue,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error(ErrorCode::kDomain, w) {}
};

// Caller violated a structural precondition (mismatched jets, exhausted order).
struct UsageError : Error {
  explicit UsageError(const std::string& w) : Error(ErrorCode::kUsage, w) {}
};

struct RangeError : Error {
  explicit RangeError(const std::string& w) : Error(ErrorCode::kRange, w) {}
};

struct BracketError : Error {
  explicit BracketError(const std::string& w) : Error(ErrorCode::kBracket, w) {}
};

struct NumericalError : Error {
  explicit NumericalError(const std::string& w)
      : Error(ErrorCode::kNumerical, w) {}
};

struct ValidationError : Error {
  explicit ValidationError(const std::string& w)
      : Error(ErrorCode::kValidation, w) {}
};

struct NotEigenvalueError : Error {
  explicit NotEigenvalueError(const std::string& w)
      : Error(ErrorCode::kNotEigenvalue, w) {}
};

}  // namespace cornell
