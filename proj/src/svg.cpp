#include "quadtile/svg.hpp"

#include <array>
#include <cstdio>

namespace quadtile {

namespace {

constexpr double kCanvasWidth = 512.0;

std::string fixed6(double v) {
  if (v > -5e-7 && v < 5e-7) v = 0.0;
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.6f", v);
  return buf.data();
}

const char* fill_for(const PlacedTile& tile) {
  static constexpr std::array<const char*, 6> palette = {"#cfe2f3", "#f4cccc", "#d9ead3",
                                                         "#fff2cc", "#d9d2e9", "#fce5cd"};
  return palette[tile.shape_index.value_or(0) % palette.size()];
}

}  // namespace

std::string render_svg(const Tiling& t) {
  const double scale = kCanvasWidth / t.width.approx();
  const double height = t.height.approx() * scale;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed6(kCanvasWidth) + "\" height=\"" +
         fixed6(height) + "\" viewBox=\"0 0 " + fixed6(kCanvasWidth) + " " + fixed6(height) + "\">\n";
  out += "<title>W = " + t.width.str() + ", H = " + t.height.str() + ", tiles = " + std::to_string(t.size()) +
         "</title>\n";
  for (const auto& tile : t.tiles) {
    const double x = tile.x.approx() * scale;
    const double w = tile.w.approx() * scale;
    const double h = tile.h.approx() * scale;
    // SVG y grows downward.
    const double y = height - (tile.y.approx() * scale + h);
    out += "<rect x=\"" + fixed6(x) + "\" y=\"" + fixed6(y) + "\" width=\"" + fixed6(w) + "\" height=\"" + fixed6(h) +
           "\" fill=\"" + fill_for(tile) + "\" stroke=\"#000000\" stroke-width=\"0.5\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace quadtile
