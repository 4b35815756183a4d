#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>

#include <gmpxx.h>

#include "quadtile/criteria.hpp"
#include "quadtile/tiling.hpp"

namespace quadtile {

/// A construction plan for a guillotine tiling in canonical orientation:
/// bounds of width 1 and height equal to the realized ratio.
///
///   Unit(i)            one tile of shape i, ratio x_i
///   Stack(lo, hi)      lo below hi, ratio r_lo + r_hi
///   Transpose(c)       axes swapped then rescaled to width 1, ratio 1/r_c
///   Scale(c, m/n)      n columns by m rows of copies of c, scaled by 1/n,
///                      ratio (m/n) r_c
///
/// Recipes are immutable and cheap to copy (shared subtrees).
class Recipe {
 public:
  enum class Kind { Unit, Stack, Transpose, Scale };

  static Recipe unit(std::size_t shape_index);
  static Recipe stack(Recipe lower, Recipe upper);
  static Recipe transpose(Recipe child);
  /// Throws Error(NonPositiveScale) for q <= 0.
  static Recipe scale(Recipe child, Rational q);

  Kind kind() const noexcept;
  std::size_t shape_index() const;
  const Rational& factor() const;
  const Recipe& first() const;
  const Recipe& second() const;

  /// Number of tiles the evaluated tiling will have, without evaluating.
  mpz_class tile_count() const;

  /// The height of the evaluated tiling, computed from the tree alone.
  Quad ratio(std::span<const Quad> shapes) const;

  /// Nested textual form, e.g. "stack(unit(0), scale(transpose(unit(0)), 7))".
  std::string str() const;

  Tiling evaluate(std::span<const Quad> shapes) const;

 private:
  struct Node;
  explicit Recipe(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Bounds 1 x x with a single tile.
Tiling unit(std::size_t shape_index, const Quad& x);

/// t1 below t2. Both must have width exactly 1 (Error(WidthMismatch)).
Tiling stack(const Tiling& t1, const Tiling& t2);

/// n x m grid of copies of t (q = m/n in lowest terms) scaled by 1/n.
/// Requires width 1; throws Error(NonPositiveScale) for q <= 0.
Tiling scale_rational(const Tiling& t, const Rational& q);

/// Ratio conj(x); needs conj(x) > 0 (Error(ConjugateNotPositive)).
Tiling conjugate_tiling(const Quad& x);
/// Ratio q in Q+ from x with conj(x) > 0.
Tiling rational_tiling(const Rational& q, const Quad& x);
/// Ratio -conj(x); needs conj(x) < 0 (Error(ConjugateNotNegative)).
Tiling neg_conjugate_tiling(const Quad& x);
/// Ratio q*sqrt(p) from x with conj(x) < 0.
Tiling sqrtp_tiling(const Rational& q, const Quad& x);

// Recipe forms of the building blocks above; `index` is the shape index
// recorded on the leaves.
Recipe conjugate_recipe(std::size_t index, const Quad& x);
Recipe rational_recipe(const Rational& q, std::size_t index, const Quad& x);
Recipe neg_conjugate_recipe(std::size_t index, const Quad& x);
Recipe sqrtp_recipe(const Rational& q, std::size_t index, const Quad& x);

/// The construction plan for a YES instance. Throws Error(NotTileable)
/// when decide() says NO.
Recipe plan(const ShapeSpec& spec);

/// Evaluates plan(spec) and re-verifies the result: exact cover, ratios,
/// guillotine, and bounds 1 x z. Throws Error(InternalVerificationFailure)
/// if any check fails.
Tiling construct(const ShapeSpec& spec);

}  // namespace quadtile
