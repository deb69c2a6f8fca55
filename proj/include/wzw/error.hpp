#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wzw {

enum class ErrorKind {
  NotASublattice,
  RankMismatch,
  InvalidRank,
  OrderExceedsBound,
  DimensionMismatch,
  InvalidCentralElement,
  NotALevel,
  NotPositive,
  NotACompatibleCover,
  NotCompact,
  IncompatibleLabel,
  NotAWZWModel,
  BoundsTooLarge,
  BoundExceeded,
  RankTooLarge,
  AlcoveTooLarge,
  Unsupported,
  Parse,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotASublattice: return "NotASublattice";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::InvalidRank: return "InvalidRank";
    case ErrorKind::OrderExceedsBound: return "OrderExceedsBound";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidCentralElement: return "InvalidCentralElement";
    case ErrorKind::NotALevel: return "NotALevel";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::NotACompatibleCover: return "NotACompatibleCover";
    case ErrorKind::NotCompact: return "NotCompact";
    case ErrorKind::IncompatibleLabel: return "IncompatibleLabel";
    case ErrorKind::NotAWZWModel: return "NotAWZWModel";
    case ErrorKind::BoundsTooLarge: return "BoundsTooLarge";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::RankTooLarge: return "RankTooLarge";
    case ErrorKind::AlcoveTooLarge: return "AlcoveTooLarge";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

/// Domain error raised by every module. `kind()` is stable and machine readable.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace wzw
