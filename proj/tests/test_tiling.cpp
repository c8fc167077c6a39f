#include <doctest.h>

#include <set>

#include "ribbonlab/errors.hpp"
#include "ribbonlab/oracle.hpp"
#include "ribbonlab/tiling.hpp"
#include "support/corpus.hpp"

using namespace ribbonlab;

namespace {

constexpr Step U = Step::Up;
constexpr Step R = Step::Right;

const Region kSquare = gen_rectangle(2, 2);

Tiling verticals() { return Tiling(kSquare, {{{0, 0}, {U}}, {{1, 0}, {U}}}); }
Tiling horizontals() { return Tiling(kSquare, {{{0, 0}, {R}}, {{0, 1}, {R}}}); }

std::vector<int> root_levels(const Tiling& t, int top) {
  std::vector<int> counts(static_cast<std::size_t>(top) + 1, 0);
  for (const auto& ribbon : t.ribbons()) ++counts[static_cast<std::size_t>(ribbon.level())];
  return counts;
}

}  // namespace

TEST_CASE("ribbon geometry") {
  const Ribbon r{{2, 3}, {U, R, R, U}};
  CHECK(r.length() == 5);
  CHECK(r.cells() == std::vector<Cell>{{2, 3}, {2, 4}, {3, 4}, {4, 4}, {4, 5}});
  CHECK(r.end() == Cell{4, 5});
  for (std::size_t i = 0; i < r.cells().size(); ++i) CHECK(r.cells()[i].level() == 5 + static_cast<int>(i));
  CHECK(word_string(r.word) == "URRU");
  CHECK(parse_word("URRU") == r.word);
  CHECK_THROWS_AS(parse_word("UX"), FormatError);
}

TEST_CASE("validate_tiling") {
  CHECK(validate_tiling(verticals(), 2));
  CHECK(validate_tiling(horizontals(), 2));
  CHECK_FALSE(validate_tiling(Tiling(kSquare, {{{0, 0}, {U}}, {{0, 0}, {R}}}), 2));
  CHECK_FALSE(validate_tiling(Tiling(kSquare, {{{0, 0}, {U}}, {{1, 0}, {U}}}), 3));
  CHECK(validate_tiling(Tiling(gen_rectangle(3, 1), {{{0, 0}, {R, R}}}), 3));
  CHECK_FALSE(validate_tiling(Tiling(gen_rectangle(3, 1), {{{0, 0}, {R}}}), 2));
  CHECK_FALSE(validate_tiling(Tiling(gen_rectangle(2, 1), {{{0, 0}, {U}}}), 2));
}

TEST_CASE("compute_tau") {
  CHECK(compute_tau({{1, 2, 1}}, 2)->tau == std::vector<int>{1, 1, 0});
  CHECK(compute_tau({{1, 2, 3, 3, 2, 1}}, 2)->tau == std::vector<int>{1, 1, 2, 1, 1, 0});
  CHECK_FALSE(compute_tau({{1, 2}}, 3).has_value());
  CHECK(compute_tau({{1, 2, 3, 2, 1}}, 3)->tau == std::vector<int>{1, 1, 1, 0, 0});
  CHECK_FALSE(compute_tau({{1, 1}}, 3).has_value());  // window never closes
  CHECK_THROWS_AS(compute_tau({{1}}, 1), std::invalid_argument);
}

TEST_CASE("tau is the same for every tiling and obeys the level equation") {
  for (const auto& item : testing::test_corpus()) {
    if (item.region.area() > 16) continue;
    const auto profile = level_profile(item.region);
    const auto tau = compute_tau(profile, item.n);
    const auto tilings = oracle_enumerate(item.region, item.n);
    if (!tau) {
      CHECK(tilings.empty());
      continue;
    }
    for (const auto& t : tilings) CHECK(root_levels(t, item.region.max_level()) == tau->tau);
    for (std::size_t l = 0; l < profile.sigma.size(); ++l) {
      int window = 0;
      for (int j = static_cast<int>(l) - item.n + 1; j <= static_cast<int>(l); ++j)
        if (j >= 0) window += tau->tau[static_cast<std::size_t>(j)];
      CHECK(window == profile.sigma[l]);
    }
  }
}

TEST_CASE("encode_roots") {
  CHECK(encode_roots(verticals()).roots() == std::vector<Cell>{{0, 0}, {1, 0}});
  CHECK(encode_roots(horizontals()).roots() == std::vector<Cell>{{0, 0}, {0, 1}});
  CHECK(encode_roots(Tiling(gen_rectangle(3, 1), {{{0, 0}, {R, R}}})).roots() == std::vector<Cell>{{0, 0}});
  CHECK_THROWS_AS(encode_roots(Tiling(kSquare, {{{0, 0}, {U}}})), std::invalid_argument);
}

TEST_CASE("decode_roots examples") {
  auto h = decode_roots(RootSet(kSquare, 2, {{0, 0}, {0, 1}}));
  REQUIRE(std::holds_alternative<Tiling>(h));
  CHECK(std::get<Tiling>(h) == horizontals());

  auto v = decode_roots(RootSet(kSquare, 2, {{0, 0}, {1, 0}}));
  REQUIRE(std::holds_alternative<Tiling>(v));
  CHECK(std::get<Tiling>(v) == verticals());

  auto bad = decode_roots(RootSet(kSquare, 2, {{0, 0}, {1, 1}}));
  REQUIRE(std::holds_alternative<DecodeReject>(bad));
  CHECK(std::get<DecodeReject>(bad).level == 1);
  CHECK(std::get<DecodeReject>(bad).reason == DecodeReject::Reason::CountMismatch);
}

TEST_CASE("decode_roots reject reasons") {
  using Reason = DecodeReject::Reason;
  auto outside = decode_roots(RootSet(kSquare, 2, {{0, 0}, {5, 5}}));
  CHECK(std::get<DecodeReject>(outside).reason == Reason::NotInRegion);

  // Level 0 squares must all be roots.
  auto missing = decode_roots(RootSet(gen_rectangle(2, 1), 2, {{1, 0}}));
  CHECK(std::get<DecodeReject>(missing).reason == Reason::CountMismatch);
  CHECK(std::get<DecodeReject>(missing).level == 0);

  const Region gap = testing::region_from({{0, 0}, {2, -1}});
  auto far = decode_roots(RootSet(gap, 2, {{0, 0}}));
  CHECK(std::get<DecodeReject>(far).reason == Reason::NonAdjacent);

  auto shortr = decode_roots(RootSet(gen_rectangle(2, 1), 3, {{0, 0}}));
  CHECK(std::get<DecodeReject>(shortr).reason == Reason::UnfinishedRibbon);
  CHECK(std::get<DecodeReject>(shortr).level == 2);
  CHECK(to_string(Reason::UnfinishedRibbon) == "unfinished-ribbon");
}

TEST_CASE("root-set codec is a bijection on small regions") {
  for (const auto& item : testing::test_corpus()) {
    if (item.region.area() > 14) continue;
    std::set<std::vector<std::pair<int, int>>> seen;
    const auto tilings = oracle_enumerate(item.region, item.n);
    for (const auto& t : tilings) {
      const RootSet rs = encode_roots(t);
      CHECK(static_cast<int>(rs.roots().size()) == item.region.area() / item.n);
      auto back = decode_roots(rs);
      REQUIRE(std::holds_alternative<Tiling>(back));
      CHECK(std::get<Tiling>(back) == t);
      std::vector<std::pair<int, int>> key;
      for (Cell c : rs.roots()) key.emplace_back(c.x, c.y);
      seen.insert(key);
    }
    CHECK(seen.size() == tilings.size());
  }
}

TEST_CASE("tiling and root serialization") {
  const Tiling t = verticals();
  CHECK(serialize_tiling(t) == "0 0 U\n1 0 U\n");
  CHECK(parse_tiling(serialize_tiling(t), kSquare) == t);
  CHECK(parse_tiling("% header\n1 0 U\n0 0 U", kSquare) == t);
  const RootSet rs = encode_roots(horizontals());
  CHECK(serialize_roots(rs) == "0 0\n0 1\n");
  CHECK(parse_roots(serialize_roots(rs), kSquare, 2) == rs);
  CHECK_THROWS_AS(parse_tiling("0 0", kSquare), FormatError);
  CHECK_THROWS_AS(parse_tiling("0 a U", kSquare), FormatError);
  CHECK_THROWS_AS(parse_roots("0 0 1", kSquare, 2), FormatError);
}
