#include "ftatlas/error.hpp"

namespace ftatlas {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kAntisymmetryViolation: return "ANTISYMMETRY_VIOLATION";
    case ErrorCode::kJacobiViolation: return "JACOBI_VIOLATION";
    case ErrorCode::kDimMismatch: return "DIM_MISMATCH";
    case ErrorCode::kNotSolvable: return "NOT_SOLVABLE";
    case ErrorCode::kFlagSearchFailed: return "FLAG_SEARCH_FAILED";
    case ErrorCode::kNoWitnessFound: return "NO_WITNESS_FOUND";
    case ErrorCode::kNoncommutingPair: return "NONCOMMUTING_PAIR";
    case ErrorCode::kNotClosed: return "NOT_CLOSED";
    case ErrorCode::kTemplateMismatch: return "TEMPLATE_MISMATCH";
    case ErrorCode::kInconsistentFlags: return "INCONSISTENT_FLAGS";
    case ErrorCode::kBadParams: return "BAD_PARAMS";
    case ErrorCode::kInvalidGroup: return "INVALID_GROUP";
    case ErrorCode::kEmptyShiftSet: return "EMPTY_SHIFT_SET";
    case ErrorCode::kNotAFrame: return "NOT_A_FRAME";
    case ErrorCode::kNotAProjection: return "NOT_A_PROJECTION";
    case ErrorCode::kNotCommuting: return "NOT_COMMUTING";
    case ErrorCode::kNotASubgroup: return "NOT_A_SUBGROUP";
    case ErrorCode::kNotAFrameOnH: return "NOT_A_FRAME_ON_H";
    case ErrorCode::kEmptyCenters: return "EMPTY_CENTERS";
    case ErrorCode::kDuplicatePoints: return "DUPLICATE_POINTS";
    case ErrorCode::kWidthUnresolvable: return "WIDTH_UNRESOLVABLE";
    case ErrorCode::kSizeMismatch: return "SIZE_MISMATCH";
    case ErrorCode::kDependentSpan: return "DEPENDENT_SPAN";
    case ErrorCode::kUnknownName: return "UNKNOWN_NAME";
    case ErrorCode::kParseError: return "PARSE_ERROR";
    case ErrorCode::kCapExceeded: return "CAP_EXCEEDED";
  }
  return "UNKNOWN_ERROR";
}

}  // namespace ftatlas
