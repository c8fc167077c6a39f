#pragma once

#include <functional>
#include <vector>

#include "ribbonlab/enumerate.hpp"
#include "ribbonlab/region.hpp"
#include "ribbonlab/tiling.hpp"

namespace ribbonlab {

// Ground-truth enumerator that shares nothing with the root-choice search:
// the uncovered square lowest in (level, x) order must be the root of its
// ribbon, so try every direction word that fits there and backtrack. Words
// are tried in lexicographic order of their "R"/"U" spelling.
void oracle_for_each(const Region& r, int n, const std::function<bool(const Tiling&)>& visit);
std::vector<Tiling> oracle_enumerate(const Region& r, int n);
CountResult oracle_count(const Region& r, int n);

}  // namespace ribbonlab
