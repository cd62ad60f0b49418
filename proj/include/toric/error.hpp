#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

enum class ErrorKind {
  ZeroVector,
  NotSquare,
  NotUnimodular,
  DimensionMismatch,
  NotStronglyConvex,
  InvalidFan,
  BadParams,
  InfiniteRoots,
  NoWitness,
  NotComplete,
  RaysDoNotSpan,
  TorsionClassGroup,
  DegeneratePolytope,
  InvalidInput,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotStronglyConvex: return "NotStronglyConvex";
    case ErrorKind::InvalidFan: return "InvalidFan";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::InfiniteRoots: return "InfiniteRoots";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::NotComplete: return "NotComplete";
    case ErrorKind::RaysDoNotSpan: return "RaysDoNotSpan";
    case ErrorKind::TorsionClassGroup: return "TorsionClassGroup";
    case ErrorKind::DegeneratePolytope: return "DegeneratePolytope";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so that
/// callers (and tests) can dispatch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace toric
