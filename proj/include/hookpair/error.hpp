#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hookpair {

enum class ErrorCode {
  InvalidBound,
  NotWeaklyDecreasing,
  PartExceedsN,
  WrongLength,
  EmptySet,
  CellNotInSet,
  NotASubset,
  IndexOutOfRange,
  UnknownRegion,
  NotADyckPath,
  NoMatchingDownStep,
  CellNotInT,
  CounterexampleFound,
  NotStrict,
  WrongN,
  KindWithoutDiagonal,
  NoShiftRow,
  IoError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidBound: return "InvalidBound";
    case ErrorCode::NotWeaklyDecreasing: return "NotWeaklyDecreasing";
    case ErrorCode::PartExceedsN: return "PartExceedsN";
    case ErrorCode::WrongLength: return "WrongLength";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::CellNotInSet: return "CellNotInSet";
    case ErrorCode::NotASubset: return "NotASubset";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::UnknownRegion: return "UnknownRegion";
    case ErrorCode::NotADyckPath: return "NotADyckPath";
    case ErrorCode::NoMatchingDownStep: return "NoMatchingDownStep";
    case ErrorCode::CellNotInT: return "CellNotInT";
    case ErrorCode::CounterexampleFound: return "CounterexampleFound";
    case ErrorCode::NotStrict: return "NotStrict";
    case ErrorCode::WrongN: return "WrongN";
    case ErrorCode::KindWithoutDiagonal: return "KindWithoutDiagonal";
    case ErrorCode::NoShiftRow: return "NoShiftRow";
    case ErrorCode::IoError: return "IoError";
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

}  // namespace hookpair
