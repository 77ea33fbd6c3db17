#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace splint {

enum class ErrorCode {
  RankMismatch,
  NonIntegral,
  UnsupportedLabel,
  ClosureOverflow,
  NotDominant,
  NotIntegral,
  NonIntegerResult,
  ZeroDenominator,
  UnsupportedCase,
  NondominantLeadingTerm,
  NegativeMultiplicity,
  InvalidPartition,
  InvalidLabel,
  UnsupportedPattern,
  LayerOutOfRange,
  NotACharacter,
  CorruptCacheEntry,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::NonIntegral: return "NonIntegral";
    case ErrorCode::UnsupportedLabel: return "UnsupportedLabel";
    case ErrorCode::ClosureOverflow: return "ClosureOverflow";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::UnsupportedCase: return "UnsupportedCase";
    case ErrorCode::NondominantLeadingTerm: return "NondominantLeadingTerm";
    case ErrorCode::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::UnsupportedPattern: return "UnsupportedPattern";
    case ErrorCode::LayerOutOfRange: return "LayerOutOfRange";
    case ErrorCode::NotACharacter: return "NotACharacter";
    case ErrorCode::CorruptCacheEntry: return "CorruptCacheEntry";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace splint
