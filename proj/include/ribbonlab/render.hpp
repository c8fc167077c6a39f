#pragma once

#include <optional>
#include <string>

#include "ribbonlab/region.hpp"
#include "ribbonlab/tiling.hpp"

namespace ribbonlab {

// Deterministic SVG 1.1 picture of a region and, optionally, one of its
// tilings. `rotated` turns the lattice 45 degrees counter-clockwise so each
// level lies on a horizontal line. Throws std::invalid_argument when the
// tiling belongs to another region or leaves it.
std::string render_svg(const Region& r, const std::optional<Tiling>& tiling, bool rotated);

}  // namespace ribbonlab
