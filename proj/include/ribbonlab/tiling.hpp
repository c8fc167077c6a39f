#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ribbonlab/region.hpp"

namespace ribbonlab {

enum class Step : std::uint8_t { Up, Right };

// An n-ribbon: a root square followed by n-1 unit steps up or right, so it
// meets each of n consecutive levels exactly once.
struct Ribbon {
  Cell root;
  std::vector<Step> word;

  int length() const noexcept { return static_cast<int>(word.size()) + 1; }
  int level() const noexcept { return root.level(); }
  std::vector<Cell> cells() const;
  Cell end() const noexcept;

  friend bool operator==(const Ribbon&, const Ribbon&) = default;
};

std::string word_string(const std::vector<Step>& word);
// Throws FormatError on characters other than 'U'/'R'.
std::vector<Step> parse_word(std::string_view text);

// A set of ribbons over a region. Ribbons are kept sorted by (root level,
// root x), which is also the left-to-right order of tiles within a level.
class Tiling {
 public:
  Tiling(Region region, std::vector<Ribbon> ribbons);

  const Region& region() const noexcept { return region_; }
  const std::vector<Ribbon>& ribbons() const noexcept { return ribbons_; }

  friend bool operator==(const Tiling&, const Tiling&) = default;

 private:
  Region region_;
  std::vector<Ribbon> ribbons_;
};

// Every ribbon has length n, and the ribbons partition the region exactly.
bool validate_tiling(const Tiling& t, int n);

struct TauProfile {
  std::vector<int> tau;  // tiles rooted at levels 0..L

  friend bool operator==(const TauProfile&, const TauProfile&) = default;
};

// Number of tiles rooted at each level, forced by the level counts through
// sigma_l = tau_{l-n+1} + ... + tau_l. Empty when some level would need a
// negative count, including levels L+1..L+n-1 where sigma vanishes.
std::optional<TauProfile> compute_tau(const LevelProfile& profile, int n);

// Root squares of a tiling; sorted by (level, x).
class RootSet {
 public:
  RootSet(Region region, int n, std::vector<Cell> roots);

  const Region& region() const noexcept { return region_; }
  int n() const noexcept { return n_; }
  const std::vector<Cell>& roots() const noexcept { return roots_; }

  friend bool operator==(const RootSet&, const RootSet&) = default;

 private:
  Region region_;
  int n_;
  std::vector<Cell> roots_;
};

// Throws std::invalid_argument if t is not a valid tiling.
RootSet encode_roots(const Tiling& t);

struct DecodeReject {
  enum class Reason { NotInRegion, CountMismatch, NonAdjacent, UnfinishedRibbon };
  int level = 0;
  Reason reason = Reason::CountMismatch;
  std::string detail;
};

std::string_view to_string(DecodeReject::Reason reason) noexcept;

// Rebuilds the unique tiling with the given roots, level by level: the
// tiles still growing past level l, read left to right, take the non-root
// squares of level l+1 left to right.
std::variant<Tiling, DecodeReject> decode_roots(const RootSet& rs);

// "x y WORD" per ribbon, one per line, in tiling order.
std::string serialize_tiling(const Tiling& t);
// Throws FormatError; the result is not validated against n.
Tiling parse_tiling(std::string_view text, const Region& region);
// "x y" per root, sorted by (level, x).
std::string serialize_roots(const RootSet& rs);
RootSet parse_roots(std::string_view text, const Region& region, int n);

}  // namespace ribbonlab
