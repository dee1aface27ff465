#pragma once

#include <stdexcept>
#include <string>

namespace adsvol {

inline constexpr const char* kVersion = "0.1.0";

enum class ErrorKind {
  InvalidInput,
  NotHyperbolic,
  SharedEndpoint,
  NonPositiveLength,
  GenusTooSmall,
  DimensionMismatch,
  DegenerateLength,
  NumericalFailure,
  UnsupportedGenus,
  BudgetExceeded,
  NotSimple,
  PreconditionViolated,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotHyperbolic: return "NotHyperbolic";
    case ErrorKind::SharedEndpoint: return "SharedEndpoint";
    case ErrorKind::NonPositiveLength: return "NonPositiveLength";
    case ErrorKind::GenusTooSmall: return "GenusTooSmall";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DegenerateLength: return "DegenerateLength";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
    case ErrorKind::UnsupportedGenus: return "UnsupportedGenus";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
  }
  return "Unknown";
}

}  // namespace adsvol
