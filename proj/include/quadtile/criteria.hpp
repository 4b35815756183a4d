#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "quadtile/quad.hpp"

namespace quadtile {

/// A tiling question: can the 1 x target rectangle be dissected into
/// rectangles whose side ratios are among `shapes`?
struct ShapeSpec {
  FieldPtr ctx;
  std::vector<Quad> shapes;
  Quad target;
};

/// Builds a spec after checking that shapes is nonempty, every value is
/// positive and everything lives in `ctx`. Throws Error(DegenerateShape) or
/// Error(ContextMismatch).
ShapeSpec make_spec(FieldPtr ctx, std::vector<Quad> shapes, Quad target);

/// Shapes i and j have conjugates of opposite sign.
struct Mixed {
  std::size_t i;
  std::size_t j;
};

/// Every conjugate positive; k maximizes |b|/a (smallest index on ties).
struct AllPositiveConj {
  std::size_t k;
  Rational bound;
};

/// Every conjugate negative; k maximizes |a|/b (smallest index on ties).
struct AllNegativeConj {
  std::size_t k;
  Rational bound;
};

using Classification = std::variant<Mixed, AllPositiveConj, AllNegativeConj>;

enum class Verdict { Yes, No };

struct Decision {
  Verdict verdict;
  Classification classification;
  /// Human-readable account of the admissible set and where z falls.
  std::string reason;

  bool yes() const noexcept { return verdict == Verdict::Yes; }
};

/// Throws Error(DegenerateShape) if some shape is not positive.
Classification classify(const ShapeSpec& spec);

/// Exact decision by admissible-set membership:
///   Mixed: every positive z;
///   AllPositiveConj: e > 0 and |f| <= e * bound;
///   AllNegativeConj: f > 0 and |e| <= f * bound.
Decision decide(const ShapeSpec& spec);

/// Same membership test for a precomputed classification. Does not
/// re-check positivity of z.
bool admissible(const Classification& c, const Quad& z);

std::string describe(const Classification& c);

/// Single-shape criterion written in terms of z = delta*x1 + gamma. Kept
/// free of any shared logic with decide() so the two can be compared.
/// Throws Error(RationalShape) when x1 is rational.
bool theorem6_decide(const Quad& z, const Quad& x1);

}  // namespace quadtile
