#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ellcov {

enum class ErrorCode {
  InvalidArgument,
  NotTrivalent,
  NotConnected,
  BadCardinality,
  GenusTooLarge,
  HasBridge,
  LoopEdge,
  ArityMismatch,
  BudgetExceeded,
  Inconsistent,
  Underdetermined,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotTrivalent: return "NotTrivalent";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::BadCardinality: return "BadCardinality";
    case ErrorCode::GenusTooLarge: return "GenusTooLarge";
    case ErrorCode::HasBridge: return "HasBridge";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::Underdetermined: return "Underdetermined";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace ellcov
