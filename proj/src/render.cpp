#include "triples/render.hpp"

#include <algorithm>
#include <cstdio>

namespace triples {

namespace {

constexpr Rgb kPalette[12] = {
    {40, 40, 40},    // 0: dark
    {235, 235, 225},  // 1: light
    {214, 69, 65},   {68, 108, 179}, {77, 175, 74},  {255, 127, 0},
    {152, 78, 163},  {255, 217, 47}, {166, 86, 40},  {247, 129, 191},
    {0, 153, 153},   {153, 153, 51},
};

constexpr Rgb kStippleA = {200, 200, 200};
constexpr Rgb kStippleB = {120, 120, 120};

Vertex render_limit(const Coloring& col) {
  if (col.limit) return *col.limit;
  if (!col.assignments.empty()) return col.assignments.back().first;
  return 0;
}

// colors[n-1] for n in 1..limit; -1 where unassigned
std::vector<int> cell_colors(const Coloring& col, Vertex limit) {
  std::vector<int> cells(static_cast<std::size_t>(limit), -1);
  for (const auto& [v, c] : col.assignments)
    if (1 <= v && v <= limit) cells[static_cast<std::size_t>(v - 1)] = c;
  return cells;
}

}  // namespace

Rgb palette_color(const RenderSpec& spec, int color) {
  if (!spec.palette.empty())
    return spec.palette[static_cast<std::size_t>(color) % spec.palette.size()];
  return kPalette[static_cast<std::size_t>(color) % 12];
}

std::string render_ppm(const Coloring& col, const RenderSpec& spec) {
  const Vertex limit = render_limit(col);
  const int width = spec.row_width;
  const int cell = spec.cell_size;
  const long rows = (limit + width - 1) / width;
  const long wpx = static_cast<long>(width) * cell;
  const long hpx = rows * cell;
  const std::vector<int> cells = cell_colors(col, limit);

  std::string out = "P3\n" + std::to_string(wpx) + ' ' + std::to_string(hpx) + "\n255\n";
  out.reserve(out.size() + static_cast<std::size_t>(wpx) * hpx * 12 + 16);
  char buf[16];
  for (long y = 0; y < hpx; ++y) {
    for (long x = 0; x < wpx; ++x) {
      const long n = (y / cell) * width + (x / cell) + 1;
      Rgb px;
      if (n <= limit && cells[static_cast<std::size_t>(n - 1)] >= 0) {
        px = palette_color(spec, cells[static_cast<std::size_t>(n - 1)]);
      } else {
        const bool a = ((x / 2) + (y / 2)) % 2 == 0;
        px = a ? kStippleA : kStippleB;
      }
      std::snprintf(buf, sizeof buf, "%d %d %d", px.r, px.g, px.b);
      out += buf;
      out += (x + 1 == wpx) ? '\n' : ' ';
    }
  }
  return out;
}

std::string render_svg(const Coloring& col, const RenderSpec& spec) {
  const Vertex limit = render_limit(col);
  const int width = spec.row_width;
  const int cell = spec.cell_size;
  const long rows = (limit + width - 1) / width;
  const long wpx = static_cast<long>(width) * cell;
  const long hpx = rows * cell;
  const std::vector<int> cells = cell_colors(col, limit);

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(wpx) +
         "\" height=\"" + std::to_string(hpx) + "\" viewBox=\"0 0 " +
         std::to_string(wpx) + ' ' + std::to_string(hpx) + "\">\n";
  out += "<defs><pattern id=\"stipple\" width=\"4\" height=\"4\" "
         "patternUnits=\"userSpaceOnUse\">"
         "<rect width=\"4\" height=\"4\" fill=\"#c8c8c8\"/>"
         "<rect width=\"2\" height=\"2\" fill=\"#787878\"/>"
         "<rect x=\"2\" y=\"2\" width=\"2\" height=\"2\" fill=\"#787878\"/>"
         "</pattern></defs>\n";
  char buf[96];
  const long total = rows * width;
  for (long n = 1; n <= total; ++n) {
    const long a = (n - 1) % width;  // zero-based column
    const long b = (n - 1) / width;
    const long x = a * cell, y = b * cell;
    if (n <= limit && cells[static_cast<std::size_t>(n - 1)] >= 0) {
      const Rgb c = palette_color(spec, cells[static_cast<std::size_t>(n - 1)]);
      std::snprintf(buf, sizeof buf,
                    "<rect x=\"%ld\" y=\"%ld\" width=\"%d\" height=\"%d\" "
                    "fill=\"#%02x%02x%02x\"/>\n",
                    x, y, cell, cell, c.r, c.g, c.b);
    } else {
      std::snprintf(buf, sizeof buf,
                    "<rect x=\"%ld\" y=\"%ld\" width=\"%d\" height=\"%d\" "
                    "fill=\"url(#stipple)\"/>\n",
                    x, y, cell, cell);
    }
    out += buf;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace triples
