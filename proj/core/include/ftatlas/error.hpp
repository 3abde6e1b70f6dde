#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ftatlas {

/// Failure categories surfaced by every module. The CLI maps them to
/// stable identifiers in its JSON error reports.
enum class ErrorCode {
  kAntisymmetryViolation,
  kJacobiViolation,
  kDimMismatch,
  kNotSolvable,
  kFlagSearchFailed,
  kNoWitnessFound,
  kNoncommutingPair,
  kNotClosed,
  kTemplateMismatch,
  kInconsistentFlags,
  kBadParams,
  kInvalidGroup,
  kEmptyShiftSet,
  kNotAFrame,
  kNotAProjection,
  kNotCommuting,
  kNotASubgroup,
  kNotAFrameOnH,
  kEmptyCenters,
  kDuplicatePoints,
  kWidthUnresolvable,
  kSizeMismatch,
  kDependentSpan,
  kUnknownName,
  kParseError,
  kCapExceeded,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ftatlas
