#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ribbonlab {

// Unit square [x, x+1] x [y, y+1] of the integer lattice.
struct Cell {
  int x = 0;
  int y = 0;

  constexpr int level() const noexcept { return x + y; }

  friend constexpr bool operator==(Cell, Cell) = default;
};

// Canonical cell order used everywhere: by level, then by x.
struct LevelOrder {
  constexpr bool operator()(Cell a, Cell b) const noexcept {
    return a.level() != b.level() ? a.level() < b.level() : a.x < b.x;
  }
};

struct LevelProfile {
  std::vector<int> sigma;

  friend bool operator==(const LevelProfile&, const LevelProfile&) = default;
};

// A finite set of lattice cells, stored translated so that the lowest level
// is 0 and the leftmost lowest-level cell sits at (0, 0). May be
// disconnected and may have holes.
class Region {
 public:
  // Deduplicates and normalizes. Throws std::invalid_argument when empty.
  explicit Region(std::vector<Cell> cells);

  // All cells ordered by (level, x).
  std::span<const Cell> cells() const noexcept { return cells_; }
  // Cells of level l ordered by x; empty outside 0..max_level().
  std::span<const Cell> level_cells(int l) const noexcept;

  int area() const noexcept { return static_cast<int>(cells_.size()); }
  int max_level() const noexcept { return static_cast<int>(offsets_.size()) - 2; }

  bool contains(Cell c) const noexcept { return index_of(c) >= 0; }
  // Position of c in cells(), or -1.
  int index_of(Cell c) const noexcept;
  // Position of c within level_cells(c.level()), or -1.
  int index_in_level(Cell c) const noexcept;

  int min_x() const noexcept { return min_x_; }
  int min_y() const noexcept { return min_y_; }
  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }

  friend bool operator==(const Region& a, const Region& b) { return a.cells_ == b.cells_; }

 private:
  std::vector<Cell> cells_;
  std::vector<int> offsets_;  // level l occupies [offsets_[l], offsets_[l+1])
  std::vector<std::int32_t> grid_;
  int min_x_ = 0, min_y_ = 0, width_ = 0, height_ = 0;
};

// Translation that brings a cell set into Region's canonical position.
std::vector<Cell> normalize_cells(std::vector<Cell> cells);

LevelProfile level_profile(const Region& r);

// Cells of level l outside r that share an edge with a cell of r, by x.
std::vector<Cell> boundary_squares(const Region& r, int l);

// Integer realization of the left-of order on levels {lower, lower+1}:
// 2x on the upper level, 2x+1 on the lower one. Throws std::invalid_argument
// for cells outside the band.
int order_key(Cell c, int lower);

// Left-of relation between two squares, straight from its two conditions.
bool left_of(Cell a, Cell b) noexcept;

Region rotate180(const Region& r);

Region gen_rectangle(int width, int height);
Region gen_aztec(int order);
// Glues t random disjoint n-ribbons; tileable by construction, deterministic
// in seed.
Region gen_random_tileable(int n, int tiles, std::uint64_t seed);

// Region file (.rgn): '%' comment lines, then a rectangular '#'/'.' grid,
// top row = largest y. Throws FormatError.
Region parse_region(std::string_view text);
std::string serialize_region(const Region& r);

}  // namespace ribbonlab
