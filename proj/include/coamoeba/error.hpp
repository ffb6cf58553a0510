#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coamoeba {

enum class ErrorCode {
  InvalidShape,
  TooFewRows,
  ZeroRow,
  NonzeroColumnSum,
  MinorGcdNotOne,
  RankDeficient,
  UnsupportedDimension,
  OnBoundary,
  Singular,
  BranchCut,
  SamplingFailure,
  InvalidArgument,
  Internal,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidShape: return "invalid-shape";
    case ErrorCode::TooFewRows: return "too-few-rows";
    case ErrorCode::ZeroRow: return "zero-row";
    case ErrorCode::NonzeroColumnSum: return "nonzero-column-sum";
    case ErrorCode::MinorGcdNotOne: return "minor-gcd-not-one";
    case ErrorCode::RankDeficient: return "rank-deficient";
    case ErrorCode::UnsupportedDimension: return "unsupported-dimension";
    case ErrorCode::OnBoundary: return "on-boundary";
    case ErrorCode::Singular: return "singular-parameter";
    case ErrorCode::BranchCut: return "branch-cut";
    case ErrorCode::SamplingFailure: return "sampling-failure";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// True for the codes that `validate_b` can raise.
constexpr bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidShape:
    case ErrorCode::TooFewRows:
    case ErrorCode::ZeroRow:
    case ErrorCode::NonzeroColumnSum:
    case ErrorCode::MinorGcdNotOne:
      return true;
    default:
      return false;
  }
}

}  // namespace coamoeba
