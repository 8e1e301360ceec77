#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace erdos {

enum class ErrorCode {
  ZeroCoordinate,
  DimensionTooSmall,
  ScaleTooSmall,
  NonPositiveInput,
  NonDistinctCoordinates,
  EmptyOrSingleton,
  EmptyInput,
  MixedDimensions,
  BudgetExceeded,
  OddCount,
  RadiusTooSmall,
  UnknownVariant,
  InvalidArgument,
  ParseError,
  IoError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroCoordinate: return "ZeroCoordinate";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::ScaleTooSmall: return "ScaleTooSmall";
    case ErrorCode::NonPositiveInput: return "NonPositiveInput";
    case ErrorCode::NonDistinctCoordinates: return "NonDistinctCoordinates";
    case ErrorCode::EmptyOrSingleton: return "EmptyOrSingleton";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::MixedDimensions: return "MixedDimensions";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::OddCount: return "OddCount";
    case ErrorCode::RadiusTooSmall: return "RadiusTooSmall";
    case ErrorCode::UnknownVariant: return "UnknownVariant";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace erdos
