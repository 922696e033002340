#pragma once

#include <stdexcept>
#include <string>

namespace cobweb {

// Failure taxonomy shared by the library and the CLI exit-code mapping.
enum class Errc {
  NotAcyclic,
  NotRegular,
  LengthMismatch,
  NotLinearExtension,
  NotTotalOrder,
  NotPartialOrder,
  SearchBoundExceeded,
  ConsistencyFailure,
  ParseError,
  InvalidSequence,
  BudgetExceeded,
  LevelOutOfRange,
  ForeignArc,
  InvalidVertex,
  InvalidArc,
};

inline const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotAcyclic: return "NotAcyclic";
    case Errc::NotRegular: return "NotRegular";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NotLinearExtension: return "NotLinearExtension";
    case Errc::NotTotalOrder: return "NotTotalOrder";
    case Errc::NotPartialOrder: return "NotPartialOrder";
    case Errc::SearchBoundExceeded: return "SearchBoundExceeded";
    case Errc::ConsistencyFailure: return "ConsistencyFailure";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidSequence: return "InvalidSequence";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::LevelOutOfRange: return "LevelOutOfRange";
    case Errc::ForeignArc: return "ForeignArc";
    case Errc::InvalidVertex: return "InvalidVertex";
    case Errc::InvalidArc: return "InvalidArc";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cobweb
