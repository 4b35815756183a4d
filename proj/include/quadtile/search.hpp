#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "quadtile/constructor.hpp"
#include "quadtile/quad.hpp"

namespace quadtile {

struct SearchLimits {
  std::size_t depth = 4;
  std::size_t width = 48;
  /// Candidates whose components exceed this many bits are dropped.
  std::size_t max_bits = 96;
};

/// Forward closure of the shapes under u + v, 1/u and q*u for
/// q in {1/2, 2, 1/3, 3}, keeping the `width` smallest values after each
/// round. Returns a Recipe realizing z if one is reached. Sound but
/// incomplete: no result proves nothing.
std::optional<Recipe> bounded_closure_search(const Quad& z, std::span<const Quad> shapes, const SearchLimits& limits);

}  // namespace quadtile
