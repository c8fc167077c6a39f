#include "ribbonlab/region.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <stdexcept>

#include "ribbonlab/errors.hpp"

namespace ribbonlab {

std::vector<Cell> normalize_cells(std::vector<Cell> cells) {
  if (cells.empty()) return cells;
  std::sort(cells.begin(), cells.end(), LevelOrder{});
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  const Cell anchor = cells.front();
  for (auto& c : cells) {
    c.x -= anchor.x;
    c.y -= anchor.y;
  }
  return cells;
}

Region::Region(std::vector<Cell> cells) : cells_(normalize_cells(std::move(cells))) {
  if (cells_.empty()) throw std::invalid_argument("region has no cells");

  const int top = cells_.back().level();
  offsets_.assign(static_cast<std::size_t>(top) + 2, 0);
  for (const auto& c : cells_) ++offsets_[static_cast<std::size_t>(c.level()) + 1];
  for (std::size_t l = 1; l < offsets_.size(); ++l) offsets_[l] += offsets_[l - 1];

  auto [lo_x, hi_x] = std::minmax_element(cells_.begin(), cells_.end(),
                                          [](Cell a, Cell b) { return a.x < b.x; });
  auto [lo_y, hi_y] = std::minmax_element(cells_.begin(), cells_.end(),
                                          [](Cell a, Cell b) { return a.y < b.y; });
  min_x_ = lo_x->x;
  min_y_ = lo_y->y;
  width_ = hi_x->x - min_x_ + 1;
  height_ = hi_y->y - min_y_ + 1;
  grid_.assign(static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_), -1);
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const auto& c = cells_[i];
    grid_[static_cast<std::size_t>(c.y - min_y_) * static_cast<std::size_t>(width_) +
          static_cast<std::size_t>(c.x - min_x_)] = static_cast<std::int32_t>(i);
  }
}

std::span<const Cell> Region::level_cells(int l) const noexcept {
  if (l < 0 || l > max_level()) return {};
  const auto begin = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(l)]);
  const auto end = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(l) + 1]);
  return std::span<const Cell>(cells_).subspan(begin, end - begin);
}

int Region::index_of(Cell c) const noexcept {
  const int gx = c.x - min_x_;
  const int gy = c.y - min_y_;
  if (gx < 0 || gy < 0 || gx >= width_ || gy >= height_) return -1;
  return grid_[static_cast<std::size_t>(gy) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(gx)];
}

int Region::index_in_level(Cell c) const noexcept {
  const int i = index_of(c);
  return i < 0 ? -1 : i - offsets_[static_cast<std::size_t>(c.level())];
}

LevelProfile level_profile(const Region& r) {
  LevelProfile p;
  p.sigma.resize(static_cast<std::size_t>(r.max_level()) + 1);
  for (int l = 0; l <= r.max_level(); ++l)
    p.sigma[static_cast<std::size_t>(l)] = static_cast<int>(r.level_cells(l).size());
  return p;
}

std::vector<Cell> boundary_squares(const Region& r, int l) {
  std::vector<Cell> out;
  auto consider = [&](Cell c) {
    if (!r.contains(c)) out.push_back(c);
  };
  for (const auto& c : r.level_cells(l - 1)) {
    consider({c.x, c.y + 1});
    consider({c.x + 1, c.y});
  }
  for (const auto& c : r.level_cells(l + 1)) {
    consider({c.x, c.y - 1});
    consider({c.x - 1, c.y});
  }
  std::sort(out.begin(), out.end(), [](Cell a, Cell b) { return a.x < b.x; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int order_key(Cell c, int lower) {
  if (c.level() == lower + 1) return 2 * c.x;
  if (c.level() == lower) return 2 * c.x + 1;
  throw std::invalid_argument("order_key: cell outside the two-level band");
}

bool left_of(Cell a, Cell b) noexcept {
  const int la = a.level();
  const int lb = b.level();
  if (la == lb) return a.x < b.x;
  return (la - lb == 1 || lb - la == 1) && a.x <= b.x && a.y >= b.y;
}

Region rotate180(const Region& r) {
  std::vector<Cell> cells;
  cells.reserve(r.cells().size());
  for (const auto& c : r.cells()) cells.push_back({-c.x, -c.y});
  return Region(std::move(cells));
}

Region gen_rectangle(int width, int height) {
  if (width < 1 || height < 1) throw std::invalid_argument("rectangle sides must be >= 1");
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) cells.push_back({x, y});
  return Region(std::move(cells));
}

Region gen_aztec(int order) {
  if (order < 1) throw std::invalid_argument("aztec order must be >= 1");
  std::vector<Cell> cells;
  // |x - k + 1/2| + |y - k + 1/2| <= k, doubled to stay in integers.
  for (int y = 0; y < 2 * order; ++y)
    for (int x = 0; x < 2 * order; ++x)
      if (std::abs(2 * x - 2 * order + 1) + std::abs(2 * y - 2 * order + 1) <= 2 * order)
        cells.push_back({x, y});
  return Region(std::move(cells));
}

Region gen_random_tileable(int n, int tiles, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("ribbon length must be >= 2");
  if (tiles < 1) throw std::invalid_argument("tile count must be >= 1");

  std::mt19937_64 rng(seed);
  // Plain modulo keeps sequences identical across standard libraries.
  auto draw = [&rng](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };

  std::vector<Cell> cells;
  auto occupied = [&cells](Cell c) { return std::find(cells.begin(), cells.end(), c) != cells.end(); };

  for (int t = 0; t < tiles; ++t) {
    std::vector<Cell> frontier;
    if (cells.empty()) {
      frontier.push_back({0, 0});
    } else {
      for (const auto& c : cells)
        for (Cell nb : {Cell{c.x + 1, c.y}, Cell{c.x - 1, c.y}, Cell{c.x, c.y + 1}, Cell{c.x, c.y - 1}})
          if (!occupied(nb)) frontier.push_back(nb);
      std::sort(frontier.begin(), frontier.end(), LevelOrder{});
      frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    }
    for (;;) {
      Cell at = frontier[draw(frontier.size())];
      const std::uint64_t word = rng() & ((std::uint64_t{1} << (n - 1)) - 1);
      std::vector<Cell> ribbon{at};
      for (int i = 0; i < n - 1; ++i) {
        if ((word >> i) & 1U) ++at.x; else ++at.y;
        ribbon.push_back(at);
      }
      if (std::none_of(ribbon.begin(), ribbon.end(), occupied)) {
        cells.insert(cells.end(), ribbon.begin(), ribbon.end());
        break;
      }
    }
  }
  return Region(std::move(cells));
}

Region parse_region(std::string_view text) {
  std::vector<std::string_view> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() != '%') rows.push_back(line);
    pos = nl + 1;
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  if (rows.empty()) throw FormatError("empty region");

  const std::size_t width = rows.front().size();
  std::vector<Cell> cells;
  const int height = static_cast<int>(rows.size());
  for (int r = 0; r < height; ++r) {
    const auto row = rows[static_cast<std::size_t>(r)];
    if (row.size() != width)
      throw FormatError("line " + std::to_string(r + 1) + ": length " + std::to_string(row.size()) +
                        " differs from " + std::to_string(width));
    for (std::size_t x = 0; x < row.size(); ++x) {
      if (row[x] == '#') {
        cells.push_back({static_cast<int>(x), height - 1 - r});
      } else if (row[x] != '.') {
        throw FormatError("line " + std::to_string(r + 1) + ": illegal character '" +
                          std::string(1, row[x]) + "'");
      }
    }
  }
  if (cells.empty()) throw FormatError("empty region");
  return Region(std::move(cells));
}

std::string serialize_region(const Region& r) {
  std::string out;
  for (int gy = r.height() - 1; gy >= 0; --gy) {
    for (int gx = 0; gx < r.width(); ++gx)
      out += r.contains({r.min_x() + gx, r.min_y() + gy}) ? '#' : '.';
    if (gy > 0) out += '\n';
  }
  return out;
}

}  // namespace ribbonlab
