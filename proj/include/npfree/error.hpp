#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>

namespace npfree {

/// Failure categories surfaced by the library. The CLI maps each one to a
/// distinct process exit code.
enum class ErrorCode {
  non_finite_input = 2,
  empty_history = 3,
  zero_denominator = 4,
  length_mismatch = 5,
  zero_variance = 6,
  too_short = 7,
  parse_error = 8,
  empty_file = 9,
  out_of_order = 10,
  io_error = 11,
};

inline const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::non_finite_input: return "NonFiniteInput";
    case ErrorCode::empty_history: return "EmptyHistory";
    case ErrorCode::zero_denominator: return "ZeroDenominator";
    case ErrorCode::length_mismatch: return "LengthMismatch";
    case ErrorCode::zero_variance: return "ZeroVariance";
    case ErrorCode::too_short: return "TooShort";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::empty_file: return "EmptyFile";
    case ErrorCode::out_of_order: return "OutOfOrder";
    case ErrorCode::io_error: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

namespace detail {

inline void require_finite(std::span<const double> values, const char* where) {
  for (double v : values)
    if (!std::isfinite(v)) throw Error(ErrorCode::non_finite_input, std::string(where) + ": non-finite value");
}

}  // namespace detail

}  // namespace npfree
