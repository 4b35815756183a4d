#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quadtile {

enum class ErrorKind {
  ParseError,
  NonPositiveRadicand,
  RationalSquareRoot,
  ContextMismatch,
  DivisionByZero,
  DegenerateShape,
  RationalShape,
  NotADissection,
  NotAnImpossibleInstance,
  NotTileable,
  ConstructionFailure,
  InternalVerificationFailure,
  WidthMismatch,
  NonPositiveScale,
  ConjugateNotPositive,
  ConjugateNotNegative,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// All library failures are reported through this type; `kind()` is the
/// stable machine-readable part, `what()` carries context for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace quadtile
