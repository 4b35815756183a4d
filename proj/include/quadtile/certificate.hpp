#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "quadtile/area.hpp"
#include "quadtile/criteria.hpp"
#include "quadtile/tiling.hpp"

namespace quadtile {

/// Proof that no 1 x target rectangle is tiled by rectangles of ratio
/// `shape`: under `coeffs` the bounds have "area" exactly 0, while every
/// tile of ratio `shape` has "area" of one fixed nonzero sign, because the
/// tile form has negative discriminant. Additivity then rules out a tiling.
struct Certificate {
  AreaCoeffs coeffs;
  Quad shape;
  Quad target;
  /// alpha^2 coefficient of the tile form.
  Rational leading;
  /// quarter discriminant of the tile form; negative for a valid proof.
  Rational quarter_discriminant;
};

/// Builds the certificate for a single-shape NO instance. Throws
/// Error(NotAnImpossibleInstance) if z is admissible for x1 (or either value
/// is not positive).
Certificate make_certificate(const Quad& z, const Quad& x1);

/// Re-derives everything from coeffs, shape and target with exact
/// arithmetic. Never throws on well-formed input; returns false on any
/// inconsistency.
bool check_certificate(const Certificate& cert);

/// Certificate against the extremal shape x_k plus tilings of every other
/// shape by x_k-tiles, which together refute the multi-shape instance.
struct CertificateBundle {
  std::size_t k;
  Certificate core;
  /// One entry per shape i != k, in increasing i; the tiling of ratio x_i.
  std::vector<std::size_t> reduced;
  std::vector<Tiling> reductions;
};

/// Throws Error(NotAnImpossibleInstance) for YES or mixed instances and
/// Error(ConstructionFailure) if a part fails re-verification.
CertificateBundle make_bundle(const ShapeSpec& spec);

/// Checks the core certificate against spec.target and x_k, and that each
/// reduction is an exact dissection of a 1 x x_i rectangle into x_k tiles.
bool check_bundle(const CertificateBundle& bundle, const ShapeSpec& spec);

}  // namespace quadtile
