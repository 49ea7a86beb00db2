#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rep3 {

enum class ErrorCode {
  OrderOutOfRange,
  LoopEdge,
  EndpointOutOfRange,
  EmptyResult,
  MalformedRecord,
  UnsupportedOrder,
  NotATriple,
  InvalidSubset,
  NotFeasible,
  NoFeasibleTriple,
  BudgetExceedsOrder,
  OrderTooSmall,
  OrderTooLarge,
  TheoremViolation,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OrderOutOfRange: return "OrderOutOfRange";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::EndpointOutOfRange: return "EndpointOutOfRange";
    case ErrorCode::EmptyResult: return "EmptyResult";
    case ErrorCode::MalformedRecord: return "MalformedRecord";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::NotATriple: return "NotATriple";
    case ErrorCode::InvalidSubset: return "InvalidSubset";
    case ErrorCode::NotFeasible: return "NotFeasible";
    case ErrorCode::NoFeasibleTriple: return "NoFeasibleTriple";
    case ErrorCode::BudgetExceedsOrder: return "BudgetExceedsOrder";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
  }
  return "Unknown";
}

/// Single exception type for the library. `code()` identifies the failure;
/// `line()` is set for stream-parsing errors (1-based).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace rep3
