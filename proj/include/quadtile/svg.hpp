#pragma once

#include <string>

#include "quadtile/tiling.hpp"

namespace quadtile {

/// One <rect> per tile, in tile order, on a 512-unit-wide canvas with
/// y pointing up as in the tiling. Coordinates are printed with six
/// decimals, so identical tilings give byte-identical output. Presentation
/// only; the exact bounds are given in the <title>.
std::string render_svg(const Tiling& t);

}  // namespace quadtile
