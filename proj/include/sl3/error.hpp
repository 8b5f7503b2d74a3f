#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sl3 {

enum class ErrorCode {
  NonTrivalent,
  MixedVertexOrientation,
  Nonplanar,
  BoundarySignMismatch,
  MalformedContainment,
  BoundaryMismatch,
  NotClosed,
  WrongFaceKind,
  NotNonElliptic,
  NotSuperficial,
  IdenticalWebs,
  BudgetExceeded,
  Malformed,
  ParseError,
  InvalidArgument,
};

/// Stable upper-case name, used in CLI diagnostics and JSON output.
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sl3
