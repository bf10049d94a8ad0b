#pragma once

#include <stdexcept>
#include <string>

namespace qea {

// Every recoverable failure carries a machine-readable kind plus a message
// that names the violated precondition or invariant.
enum class ErrorKind {
  NotPrime,
  BadCongruence,
  EllTooSmall,
  UnsupportedField,
  ContextMismatch,
  Singular,
  NoSolution,
  IndexOutOfRange,
  ZeroPoint,
  DegreeMismatch,
  BudgetTooSmall,
  ValidationFailure,
  BadFile,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::BadCongruence: return "BadCongruence";
    case ErrorKind::EllTooSmall: return "EllTooSmall";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ZeroPoint: return "ZeroPoint";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::BudgetTooSmall: return "BudgetTooSmall";
    case ErrorKind::ValidationFailure: return "ValidationFailure";
    case ErrorKind::BadFile: return "BadFile";
  }
  return "Unknown";
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(error_kind_name(kind)) + ": " + what);
}

}  // namespace qea
