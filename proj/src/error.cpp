#include "sl3/error.hpp"

namespace sl3 {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonTrivalent: return "NON_TRIVALENT";
    case ErrorCode::MixedVertexOrientation: return "MIXED_VERTEX_ORIENTATION";
    case ErrorCode::Nonplanar: return "NONPLANAR";
    case ErrorCode::BoundarySignMismatch: return "BOUNDARY_SIGN_MISMATCH";
    case ErrorCode::MalformedContainment: return "MALFORMED_CONTAINMENT";
    case ErrorCode::BoundaryMismatch: return "BOUNDARY_MISMATCH";
    case ErrorCode::NotClosed: return "NOT_CLOSED";
    case ErrorCode::WrongFaceKind: return "WRONG_FACE_KIND";
    case ErrorCode::NotNonElliptic: return "NOT_NON_ELLIPTIC";
    case ErrorCode::NotSuperficial: return "NOT_SUPERFICIAL";
    case ErrorCode::IdenticalWebs: return "IDENTICAL_WEBS";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::Malformed: return "MALFORMED";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

}  // namespace sl3
