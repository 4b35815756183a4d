#include "quadtile/error.hpp"

namespace quadtile {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonPositiveRadicand: return "NonPositiveRadicand";
    case ErrorKind::RationalSquareRoot: return "RationalSquareRoot";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DegenerateShape: return "DegenerateShape";
    case ErrorKind::RationalShape: return "RationalShape";
    case ErrorKind::NotADissection: return "NotADissection";
    case ErrorKind::NotAnImpossibleInstance: return "NotAnImpossibleInstance";
    case ErrorKind::NotTileable: return "NotTileable";
    case ErrorKind::ConstructionFailure: return "ConstructionFailure";
    case ErrorKind::InternalVerificationFailure: return "InternalVerificationFailure";
    case ErrorKind::WidthMismatch: return "WidthMismatch";
    case ErrorKind::NonPositiveScale: return "NonPositiveScale";
    case ErrorKind::ConjugateNotPositive: return "ConjugateNotPositive";
    case ErrorKind::ConjugateNotNegative: return "ConjugateNotNegative";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace quadtile
