#include "ribbonlab/render.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace ribbonlab {

namespace {

constexpr int kCell = 20;
constexpr int kMargin = 10;
constexpr std::array<std::string_view, 8> kPalette = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                                                       "#59a14f", "#edc948", "#b07aa1", "#ff9da7"};

struct Point {
  int x;
  int y;
};

// Lattice corner -> picture coordinates before the margin shift.
Point project(int x, int y, bool rotated) {
  if (rotated) return {(x - y) * kCell / 2, -(x + y) * kCell / 2};
  return {x * kCell, -y * kCell};
}

std::array<Point, 4> corners(Cell c, bool rotated) {
  return {project(c.x, c.y, rotated), project(c.x + 1, c.y, rotated), project(c.x + 1, c.y + 1, rotated),
          project(c.x, c.y + 1, rotated)};
}

}  // namespace

std::string render_svg(const Region& r, const std::optional<Tiling>& tiling, bool rotated) {
  std::vector<int> owner(static_cast<std::size_t>(r.area()), -1);
  if (tiling) {
    if (!(tiling->region() == r)) throw std::invalid_argument("tiling belongs to a different region");
    for (std::size_t k = 0; k < tiling->ribbons().size(); ++k)
      for (const auto& c : tiling->ribbons()[k].cells()) {
        const int i = r.index_of(c);
        if (i < 0) throw std::invalid_argument("tiling leaves the region");
        owner[static_cast<std::size_t>(i)] = static_cast<int>(k);
      }
  }

  int lo_x = INT_MAX, lo_y = INT_MAX, hi_x = INT_MIN, hi_y = INT_MIN;
  for (const auto& c : r.cells())
    for (const auto& p : corners(c, rotated)) {
      lo_x = std::min(lo_x, p.x);
      lo_y = std::min(lo_y, p.y);
      hi_x = std::max(hi_x, p.x);
      hi_y = std::max(hi_y, p.y);
    }
  const int width = hi_x - lo_x + 2 * kMargin;
  const int height = hi_y - lo_y + 2 * kMargin;
  auto sx = [&](int x) { return std::to_string(x - lo_x + kMargin); };
  auto sy = [&](int y) { return std::to_string(y - lo_y + kMargin); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) + " " +
         std::to_string(height) + "\">\n";
  out += "<g stroke=\"#333333\" stroke-width=\"1\">\n";
  for (std::size_t i = 0; i < r.cells().size(); ++i) {
    const auto pts = corners(r.cells()[i], rotated);
    const int k = owner[i];
    const std::string_view fill = k < 0 ? std::string_view("#dddddd") : kPalette[static_cast<std::size_t>(k) % kPalette.size()];
    out += "<polygon class=\"cell\" points=\"";
    for (std::size_t p = 0; p < pts.size(); ++p) {
      if (p) out += ' ';
      out += sx(pts[p].x) + "," + sy(pts[p].y);
    }
    out += "\" fill=\"";
    out += fill;
    out += "\"/>\n";
  }
  out += "</g>\n";
  if (tiling) {
    out += "<g fill=\"#000000\">\n";
    for (const auto& ribbon : tiling->ribbons()) {
      const auto pts = corners(ribbon.root, rotated);
      const int cx = (pts[0].x + pts[2].x) / 2;
      const int cy = (pts[0].y + pts[2].y) / 2;
      out += "<circle class=\"root\" cx=\"" + sx(cx) + "\" cy=\"" + sy(cy) + "\" r=\"3\"/>\n";
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace ribbonlab
