#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace posetlie {

enum class ErrorCode {
  cycle_detected,
  out_of_range,
  invalid_parameter,
  unsupported_family,
  dimension_mismatch,
  algebra_mismatch,
  no_known_witness,
  no_known_formula,
  not_double_fan,
  invalid_input,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::cycle_detected: return "CycleDetected";
    case ErrorCode::out_of_range: return "OutOfRange";
    case ErrorCode::invalid_parameter: return "InvalidParameter";
    case ErrorCode::unsupported_family: return "UnsupportedFamily";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::algebra_mismatch: return "AlgebraMismatch";
    case ErrorCode::no_known_witness: return "NoKnownWitness";
    case ErrorCode::no_known_formula: return "NoKnownFormula";
    case ErrorCode::not_double_fan: return "NotDoubleFan";
    case ErrorCode::invalid_input: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace posetlie
