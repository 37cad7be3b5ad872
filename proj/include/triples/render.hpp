#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "triples/coloring.hpp"

namespace triples {

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
};

/// Grid layout: integer n occupies column a, row b, where n = row_width*b + a
/// and 1 <= a <= row_width. Rows grow downward from n = 1 in the top-left.
struct RenderSpec {
  int row_width = 25;
  int cell_size = 8;         // pixels per block
  std::vector<Rgb> palette;  // empty -> built-in 12-entry palette
};

/// Palette lookup: color 0 dark, color 1 light, ten more hues; indexes wrap.
Rgb palette_color(const RenderSpec& spec, int color);

/// Text PPM (P3). Cells for unassigned integers within 1..limit, and the
/// tail of the last row past limit, get a checkerboard stipple.
std::string render_ppm(const Coloring& col, const RenderSpec& spec = {});

/// Same layout as SVG.
std::string render_svg(const Coloring& col, const RenderSpec& spec = {});

}  // namespace triples
