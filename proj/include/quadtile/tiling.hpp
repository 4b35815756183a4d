#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quadtile/quad.hpp"

namespace quadtile {

/// An axis-aligned tile with bottom-left corner (x, y) and size w x h.
struct PlacedTile {
  Quad x;
  Quad y;
  Quad w;
  Quad h;
  std::optional<std::size_t> shape_index;
};

/// A candidate dissection of the rectangle [0, width] x [0, height].
///
/// Nothing about the tiles is enforced on construction; the verify_*
/// functions decide whether the tiles form an exact dissection.
struct Tiling {
  Quad width;
  Quad height;
  std::vector<PlacedTile> tiles;

  const FieldPtr& field() const noexcept { return width.context(); }
  std::size_t size() const noexcept { return tiles.size(); }
  /// height / width.
  Quad ratio() const { return height / width; }
};

struct VerifyFailure {
  std::vector<std::size_t> tiles;
  std::string reason;
};

struct VerifyReport {
  bool covered = false;
  bool disjoint = false;
  bool contained = false;
  bool ratios_ok = true;
  bool guillotine = false;
  std::vector<VerifyFailure> failures;

  bool exact_dissection() const noexcept { return covered && disjoint && contained; }
};

/// Containment, pairwise interior disjointness and exact area balance.
/// Each check is reported independently. Throws Error(ContextMismatch)
/// when coordinates come from different fields.
VerifyReport verify_exact_cover(const Tiling& t);

/// Every tile must have w/h or h/w equal to one of `shapes`. A tile with a
/// preset shape_index is checked against that shape only.
VerifyReport verify_ratios(const Tiling& t, std::span<const Quad> shapes);

/// Sets shape_index on every unlabelled tile whose ratio matches a shape.
/// Returns false if some tile matches none.
bool label_shapes(Tiling& t, std::span<const Quad> shapes);

/// True iff the dissection can be produced by recursive full cuts.
/// Throws Error(NotADissection) when `t` fails verify_exact_cover.
bool is_guillotine(const Tiling& t);

/// Cover, ratio and guillotine checks merged into one report. The
/// guillotine flag is only evaluated for exact dissections.
VerifyReport verify_all(const Tiling& t, std::span<const Quad> shapes);

/// Swaps the axes of the bounds and every tile.
Tiling transpose(const Tiling& t);

/// Uniformly rescales so that the bounds have width 1.
Tiling normalize(const Tiling& t);

namespace detail {
// Exposed for cross-checking the sweep against brute force in tests.
std::vector<std::pair<std::size_t, std::size_t>> overlapping_pairs_bruteforce(const Tiling& t);
std::vector<std::pair<std::size_t, std::size_t>> overlapping_pairs_sweep(const Tiling& t);
}  // namespace detail

}  // namespace quadtile
