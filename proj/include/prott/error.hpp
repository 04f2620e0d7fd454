#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace prott {

enum class ErrorCode {
  NonAssociative,
  NoIdentity,
  NoInverse,
  UnsupportedOrder,
  OrderBoundExceeded,
  NotNormal,
  NotAPGroup,
  DepthTooLarge,
  IncompatibleChain,
  LevelOutOfRange,
  NotPGroupQuotient,
  NotNested,
  InducedMapNotSurjective,
  BadHeight,
  NotAbelian,
  NotSubconjugate,
  UnknownNode,
  HorizonTooShallow,
  SyntaxError,
  UnknownAtom,
  BadPrime,
  Unsupported,
  BadArgument,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonAssociative: return "NonAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::OrderBoundExceeded: return "OrderBoundExceeded";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotAPGroup: return "NotAPGroup";
    case ErrorCode::DepthTooLarge: return "DepthTooLarge";
    case ErrorCode::IncompatibleChain: return "IncompatibleChain";
    case ErrorCode::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorCode::NotPGroupQuotient: return "NotPGroupQuotient";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::InducedMapNotSurjective: return "InducedMapNotSurjective";
    case ErrorCode::BadHeight: return "BadHeight";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::NotSubconjugate: return "NotSubconjugate";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::HorizonTooShallow: return "HorizonTooShallow";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownAtom: return "UnknownAtom";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::BadArgument: return "BadArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library. `offset` is set for descriptor
/// syntax errors and points at the offending byte of the input.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> offset = std::nullopt)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code),
        offset_(offset) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> offset_;
};

}  // namespace prott
