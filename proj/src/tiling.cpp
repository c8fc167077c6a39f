#include "ribbonlab/tiling.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "ribbonlab/errors.hpp"

namespace ribbonlab {

namespace {

Cell step(Cell c, Step s) noexcept {
  return s == Step::Up ? Cell{c.x, c.y + 1} : Cell{c.x + 1, c.y};
}

bool ribbon_order(const Ribbon& a, const Ribbon& b) noexcept {
  return LevelOrder{}(a.root, b.root);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() != '%') lines.push_back(line);
    pos = nl + 1;
  }
  return lines;
}

// Splits on runs of spaces/tabs.
std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw FormatError("not an integer: '" + std::string(s) + "'");
  return v;
}

}  // namespace

std::vector<Cell> Ribbon::cells() const {
  std::vector<Cell> out{root};
  out.reserve(word.size() + 1);
  for (Step s : word) out.push_back(step(out.back(), s));
  return out;
}

Cell Ribbon::end() const noexcept {
  Cell c = root;
  for (Step s : word) c = step(c, s);
  return c;
}

std::string word_string(const std::vector<Step>& word) {
  std::string s;
  s.reserve(word.size());
  for (Step st : word) s += st == Step::Up ? 'U' : 'R';
  return s;
}

std::vector<Step> parse_word(std::string_view text) {
  std::vector<Step> word;
  word.reserve(text.size());
  for (char ch : text) {
    if (ch == 'U') word.push_back(Step::Up);
    else if (ch == 'R') word.push_back(Step::Right);
    else throw FormatError("illegal step '" + std::string(1, ch) + "' in ribbon word");
  }
  return word;
}

Tiling::Tiling(Region region, std::vector<Ribbon> ribbons)
    : region_(std::move(region)), ribbons_(std::move(ribbons)) {
  std::sort(ribbons_.begin(), ribbons_.end(), ribbon_order);
}

bool validate_tiling(const Tiling& t, int n) {
  const Region& r = t.region();
  if (n < 2) return false;
  std::vector<char> covered(static_cast<std::size_t>(r.area()), 0);
  std::size_t total = 0;
  for (const auto& ribbon : t.ribbons()) {
    if (ribbon.length() != n) return false;
    for (const auto& c : ribbon.cells()) {
      const int i = r.index_of(c);
      if (i < 0 || covered[static_cast<std::size_t>(i)]) return false;
      covered[static_cast<std::size_t>(i)] = 1;
      ++total;
    }
  }
  return total == covered.size();
}

std::optional<TauProfile> compute_tau(const LevelProfile& profile, int n) {
  if (n < 2) throw std::invalid_argument("ribbon length must be >= 2");
  const int top = static_cast<int>(profile.sigma.size()) - 1;
  std::vector<long long> tau;
  long long window = 0;  // tau_{l-n+1} + ... + tau_{l-1}
  for (int l = 0; l <= top + n - 1; ++l) {
    const long long sigma = l <= top ? profile.sigma[static_cast<std::size_t>(l)] : 0;
    const long long t = sigma - window;
    if (t < 0) return std::nullopt;
    tau.push_back(t);
    window += t;
    if (l - n + 1 >= 0) window -= tau[static_cast<std::size_t>(l - n + 1)];
  }
  TauProfile out;
  out.tau.reserve(static_cast<std::size_t>(top) + 1);
  for (int l = 0; l <= top; ++l) out.tau.push_back(static_cast<int>(tau[static_cast<std::size_t>(l)]));
  return out;
}

RootSet::RootSet(Region region, int n, std::vector<Cell> roots)
    : region_(std::move(region)), n_(n), roots_(std::move(roots)) {
  std::sort(roots_.begin(), roots_.end(), LevelOrder{});
  roots_.erase(std::unique(roots_.begin(), roots_.end()), roots_.end());
}

RootSet encode_roots(const Tiling& t) {
  const int n = t.ribbons().empty() ? 0 : t.ribbons().front().length();
  if (!validate_tiling(t, n)) throw std::invalid_argument("encode_roots: not a valid tiling");
  std::vector<Cell> roots;
  roots.reserve(t.ribbons().size());
  for (const auto& ribbon : t.ribbons()) roots.push_back(ribbon.root);
  return RootSet(t.region(), n, std::move(roots));
}

std::string_view to_string(DecodeReject::Reason reason) noexcept {
  switch (reason) {
    case DecodeReject::Reason::NotInRegion: return "root-outside-region";
    case DecodeReject::Reason::CountMismatch: return "count-mismatch";
    case DecodeReject::Reason::NonAdjacent: return "non-adjacent-assignment";
    case DecodeReject::Reason::UnfinishedRibbon: return "unfinished-ribbon";
  }
  return "unknown";
}

std::variant<Tiling, DecodeReject> decode_roots(const RootSet& rs) {
  using Reason = DecodeReject::Reason;
  const Region& r = rs.region();
  const int n = rs.n();
  if (n < 2) throw std::invalid_argument("ribbon length must be >= 2");

  std::vector<char> is_root(static_cast<std::size_t>(r.area()), 0);
  for (const auto& c : rs.roots()) {
    const int i = r.index_of(c);
    if (i < 0)
      return DecodeReject{c.level(), Reason::NotInRegion,
                          "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ") is not in the region"};
    is_root[static_cast<std::size_t>(i)] = 1;
  }

  std::vector<Ribbon> ribbons;
  ribbons.reserve(rs.roots().size());
  struct Growing {
    std::size_t ribbon;
    Cell last;
  };
  std::vector<Growing> growing;  // tiles that must continue to the next level, left to right

  for (int l = 0; l <= r.max_level() + 1; ++l) {
    std::vector<Cell> free_cells;
    for (const auto& c : r.level_cells(l))
      if (!is_root[static_cast<std::size_t>(r.index_of(c))]) free_cells.push_back(c);

    if (growing.size() != free_cells.size()) {
      if (l > r.max_level())
        return DecodeReject{l, Reason::UnfinishedRibbon,
                            std::to_string(growing.size()) + " ribbon(s) shorter than " + std::to_string(n)};
      return DecodeReject{l, Reason::CountMismatch,
                          std::to_string(growing.size()) + " growing ribbon(s) for " +
                              std::to_string(free_cells.size()) + " non-root square(s)"};
    }

    std::vector<Growing> next;
    for (std::size_t i = 0; i < growing.size(); ++i) {
      const Cell from = growing[i].last;
      const Cell to = free_cells[i];
      Ribbon& ribbon = ribbons[growing[i].ribbon];
      if (to == Cell{from.x, from.y + 1}) {
        ribbon.word.push_back(Step::Up);
      } else if (to == Cell{from.x + 1, from.y}) {
        ribbon.word.push_back(Step::Right);
      } else {
        return DecodeReject{l, Reason::NonAdjacent,
                            "(" + std::to_string(to.x) + "," + std::to_string(to.y) + ") is not above or right of (" +
                                std::to_string(from.x) + "," + std::to_string(from.y) + ")"};
      }
      if (ribbon.length() < n) next.push_back({growing[i].ribbon, to});
    }
    for (const auto& c : r.level_cells(l)) {
      if (!is_root[static_cast<std::size_t>(r.index_of(c))]) continue;
      ribbons.push_back({c, {}});
      next.push_back({ribbons.size() - 1, c});
    }
    std::sort(next.begin(), next.end(), [](const Growing& a, const Growing& b) { return a.last.x < b.last.x; });
    growing = std::move(next);
  }
  return Tiling(r, std::move(ribbons));
}

std::string serialize_tiling(const Tiling& t) {
  std::string out;
  for (const auto& ribbon : t.ribbons())
    out += std::to_string(ribbon.root.x) + " " + std::to_string(ribbon.root.y) + " " + word_string(ribbon.word) + "\n";
  return out;
}

Tiling parse_tiling(std::string_view text, const Region& region) {
  std::vector<Ribbon> ribbons;
  for (auto line : split_lines(text)) {
    const auto f = fields(line);
    if (f.size() != 3) throw FormatError("tiling line must be 'x y WORD': '" + std::string(line) + "'");
    ribbons.push_back({{parse_int(f[0]), parse_int(f[1])}, parse_word(f[2])});
  }
  return Tiling(region, std::move(ribbons));
}

std::string serialize_roots(const RootSet& rs) {
  std::string out;
  for (const auto& c : rs.roots()) out += std::to_string(c.x) + " " + std::to_string(c.y) + "\n";
  return out;
}

RootSet parse_roots(std::string_view text, const Region& region, int n) {
  std::vector<Cell> roots;
  for (auto line : split_lines(text)) {
    const auto f = fields(line);
    if (f.size() != 2) throw FormatError("root line must be 'x y': '" + std::string(line) + "'");
    roots.push_back({parse_int(f[0]), parse_int(f[1])});
  }
  return RootSet(region, n, std::move(roots));
}

}  // namespace ribbonlab
