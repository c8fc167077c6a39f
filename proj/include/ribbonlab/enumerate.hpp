#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <string_view>
#include <vector>

#include "ribbonlab/bigint.hpp"
#include "ribbonlab/region.hpp"
#include "ribbonlab/runs.hpp"
#include "ribbonlab/tiling.hpp"

namespace ribbonlab {

struct CountResult {
  BigInt count = 0;
  std::uint64_t nodes_explored = 0;
  std::uint64_t peak_states = 0;  // memo entries; DP only
};

// Root-choice search. Levels are processed bottom up; at each level a form-a
// run kills the branch, form-b runs are skipped and every form-c run gets
// exactly one root from its a_set. Visits root sets in lexicographic
// (level, x) order; the visitor returns false to stop early.
void for_each_root_set(const Region& r, int n, const std::function<bool(const RootSet&)>& visit);
void for_each_tiling(const Region& r, int n, const std::function<bool(const Tiling&)>& visit);
std::vector<Tiling> enumerate_tilings(const Region& r, int n,
                                      std::size_t limit = std::numeric_limits<std::size_t>::max());

// Same search without materializing tilings. With threads > 1 the top of the
// tree is split into independent subtrees; the result is identical.
CountResult count_dfs(const Region& r, int n, unsigned threads = 1);

struct DpOptions {
  std::size_t memo_cap = 1'000'000;
};

// Memoized completion counts over (level, frontier ages). Throws
// ResourceError when the memo would exceed memo_cap entries.
CountResult count_frontier_dp(const Region& r, int n, const DpOptions& options = {});

enum class TileabilityReason { Divisibility, TauInfeasible, Search };

std::string_view to_string(TileabilityReason reason) noexcept;

struct Tileability {
  bool tileable = false;
  TileabilityReason reason = TileabilityReason::Search;
};

Tileability check_tileable(const Region& r, int n);
inline bool is_tileable(const Region& r, int n) { return check_tileable(r, n).tileable; }

// A branch cut by a form-a run: the roots chosen strictly below `state.level`
// and the frontier at that level.
struct PrunedBranch {
  std::vector<Cell> roots_below;
  FrontierState state;
};

void for_each_pruned_branch(const Region& r, int n, const std::function<bool(const PrunedBranch&)>& visit);

}  // namespace ribbonlab
