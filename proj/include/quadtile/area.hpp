#pragma once

#include <span>

#include "quadtile/quad.hpp"
#include "quadtile/tiling.hpp"

namespace quadtile {

/// Coefficients of the bilinear "area" of a rectangle with sides
/// alpha + beta*sqrt(p) and gamma + delta*sqrt(p):
///   S = A*alpha*gamma + B*(beta*gamma + alpha*delta) + C*beta*delta.
/// Ordinary area is the special case (1, 0, p).
struct AreaCoeffs {
  Rational A;
  Rational B;
  Rational C;

  friend bool operator==(const AreaCoeffs&, const AreaCoeffs&) = default;
};

/// Symmetric in its two side arguments.
Rational area_functional(const AreaCoeffs& c, const Quad& side1, const Quad& side2);

/// Sum of tile "areas" equals the "area" of the bounds. Throws
/// Error(NotADissection) if `t` is not an exact dissection.
bool area_additivity_check(const Tiling& t, const AreaCoeffs& c);

/// Same check for several coefficient triples; the dissection is verified
/// once. Returns true iff every triple balances.
bool area_additivity_check(const Tiling& t, std::span<const AreaCoeffs> cs);

/// S(alpha, beta) = alpha2*alpha^2 + mixed*alpha*beta + beta2*beta^2: the
/// "area" of a tile with sides s and s*x, where s = alpha + beta*sqrt(p).
struct BinaryQuadraticForm {
  Rational alpha2;
  Rational mixed;
  Rational beta2;

  /// mixed^2/4 - alpha2*beta2. Negative iff the form is definite.
  Rational quarter_discriminant() const;
};

BinaryQuadraticForm tile_area_form(const AreaCoeffs& c, const Quad& ratio);

}  // namespace quadtile
