#ifndef FRAMEKIT_ERROR_HPP
#define FRAMEKIT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace framekit {

enum class ErrorCode {
  InvalidParams,
  NotAPoset,
  NotALattice,
  Unbounded,
  NotDistributive,
  NotATopology,
  TooLarge,
  NotAnIdeal,
  NotComplemented,
  NotDisjoint,
  NotACover,
  FrameMismatch,
  NotAUnit,
  HypothesisFailed,
  InvariantViolated,
  ParseError,
  UnknownFrame,
  UnsupportedFormat,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NotAPoset: return "NotAPoset";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::NotDistributive: return "NotDistributive";
    case ErrorCode::NotATopology: return "NotATopology";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::NotComplemented: return "NotComplemented";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::NotACover: return "NotACover";
    case ErrorCode::FrameMismatch: return "FrameMismatch";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::InvariantViolated: return "InvariantViolated";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownFrame: return "UnknownFrame";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace framekit

#endif  // FRAMEKIT_ERROR_HPP
