#include "ribbonlab/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>

#include "ribbonlab/errors.hpp"

namespace ribbonlab {

namespace {

void require_length(int n) {
  if (n < 2) throw std::invalid_argument("ribbon length must be >= 2");
}

// Calls fn(roots) for every way of picking one root per form-c run, leftmost
// run most significant, stopping when fn returns false.
template <class Fn>
bool for_each_choice(const RunDecomposition& rd, Fn&& fn) {
  std::vector<const Run*> c_runs;
  for (const auto& run : rd.runs)
    if (run.form == RunForm::C) c_runs.push_back(&run);

  std::vector<std::size_t> digit(c_runs.size(), 0);
  std::vector<Cell> roots(c_runs.size());
  for (;;) {
    for (std::size_t i = 0; i < c_runs.size(); ++i) roots[i] = c_runs[i]->a_set[digit[i]];
    if (!fn(std::as_const(roots))) return false;
    std::size_t i = c_runs.size();
    while (i > 0) {
      --i;
      if (++digit[i] < c_runs[i]->a_set.size()) break;
      digit[i] = 0;
      if (i == 0) return true;
    }
    if (c_runs.empty()) return true;
  }
}

struct Hooks {
  std::function<bool(const std::vector<Cell>&)> leaf;
  std::function<bool(const std::vector<Cell>&, const FrontierState&)> prune;
};

class RootSearch {
 public:
  RootSearch(const Region& r, int n, const Hooks& hooks) : r_(r), n_(n), hooks_(hooks) {}

  std::uint64_t nodes() const noexcept { return nodes_; }
  std::vector<Cell>& path() noexcept { return path_; }

  // Returns false once a hook asks to stop.
  bool descend(const FrontierState& state) {
    ++nodes_;
    const RunDecomposition rd = decompose_runs(r_, state, n_);
    if (rd.has_form_a()) return hooks_.prune ? hooks_.prune(path_, state) : true;
    if (state.level > r_.max_level()) return hooks_.leaf ? hooks_.leaf(path_) : true;
    return for_each_choice(rd, [&](const std::vector<Cell>& roots) {
      path_.insert(path_.end(), roots.begin(), roots.end());
      const bool go_on = descend(advance_frontier(r_, rd, state, roots, n_));
      path_.resize(path_.size() - roots.size());
      return go_on;
    });
  }

  bool run_from_start() {
    path_.assign(r_.level_cells(0).begin(), r_.level_cells(0).end());
    return descend(initial_frontier(r_));
  }

 private:
  const Region& r_;
  int n_;
  const Hooks& hooks_;
  std::vector<Cell> path_;
  std::uint64_t nodes_ = 0;
};

std::string memo_key(const std::vector<int>& ages) {
  std::string key(ages.size(), '\0');
  for (std::size_t i = 0; i < ages.size(); ++i) key[i] = static_cast<char>(ages[i]);
  return key;
}

class FrontierCounter {
 public:
  FrontierCounter(const Region& r, int n, std::size_t cap)
      : r_(r), n_(n), cap_(cap), memo_(static_cast<std::size_t>(r.max_level()) + 2) {}

  BigInt count(const FrontierState& state) {
    auto& table = memo_[static_cast<std::size_t>(state.level - 1)];
    std::string key = memo_key(state.ages);
    if (auto it = table.find(key); it != table.end()) return it->second;

    ++nodes_;
    BigInt total = 0;
    const RunDecomposition rd = decompose_runs(r_, state, n_);
    if (!rd.has_form_a()) {
      if (state.level > r_.max_level()) {
        total = 1;
      } else {
        for_each_choice(rd, [&](const std::vector<Cell>& roots) {
          total += count(advance_frontier(r_, rd, state, roots, n_));
          return true;
        });
      }
    }
    if (entries_ >= cap_)
      throw ResourceError("frontier memo exceeded its cap of " + std::to_string(cap_) + " states");
    ++entries_;
    table.emplace(std::move(key), total);
    return total;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  std::uint64_t entries() const noexcept { return entries_; }

 private:
  const Region& r_;
  int n_;
  std::size_t cap_;
  std::vector<std::unordered_map<std::string, BigInt>> memo_;
  std::uint64_t nodes_ = 0;
  std::uint64_t entries_ = 0;
};

}  // namespace

void for_each_root_set(const Region& r, int n, const std::function<bool(const RootSet&)>& visit) {
  require_length(n);
  Hooks hooks;
  hooks.leaf = [&](const std::vector<Cell>& path) { return visit(RootSet(r, n, path)); };
  RootSearch(r, n, hooks).run_from_start();
}

void for_each_tiling(const Region& r, int n, const std::function<bool(const Tiling&)>& visit) {
  for_each_root_set(r, n, [&](const RootSet& rs) {
    auto decoded = decode_roots(rs);
    if (auto* t = std::get_if<Tiling>(&decoded)) return visit(*t);
    throw std::logic_error("search produced a root set that does not decode");
  });
}

std::vector<Tiling> enumerate_tilings(const Region& r, int n, std::size_t limit) {
  std::vector<Tiling> out;
  if (limit == 0) return out;
  for_each_tiling(r, n, [&](const Tiling& t) {
    out.push_back(t);
    return out.size() < limit;
  });
  return out;
}

CountResult count_dfs(const Region& r, int n, unsigned threads) {
  require_length(n);
  std::uint64_t leaves = 0;
  Hooks hooks;
  hooks.leaf = [&](const std::vector<Cell>&) {
    ++leaves;
    return true;
  };

  if (threads <= 1) {
    RootSearch search(r, n, hooks);
    search.run_from_start();
    return {BigInt(leaves), search.nodes(), 0};
  }

  // Breadth-first split of the top of the tree into independent subtrees.
  std::uint64_t nodes = 0;
  std::vector<FrontierState> tasks{initial_frontier(r)};
  const std::size_t wanted = static_cast<std::size_t>(threads) * 8;
  while (!tasks.empty() && tasks.size() < wanted && tasks.front().level <= r.max_level()) {
    std::vector<FrontierState> next;
    for (const auto& state : tasks) {
      ++nodes;
      const RunDecomposition rd = decompose_runs(r, state, n);
      if (rd.has_form_a()) continue;
      for_each_choice(rd, [&](const std::vector<Cell>& roots) {
        next.push_back(advance_frontier(r, rd, state, roots, n));
        return true;
      });
    }
    tasks = std::move(next);
  }

  std::vector<std::uint64_t> task_leaves(tasks.size(), 0);
  std::vector<std::uint64_t> task_nodes(tasks.size(), 0);
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        try {
          for (std::size_t i = cursor++; i < tasks.size(); i = cursor++) {
            std::uint64_t local = 0;
            Hooks h;
            h.leaf = [&local](const std::vector<Cell>&) {
              ++local;
              return true;
            };
            RootSearch search(r, n, h);
            search.descend(tasks[i]);
            task_leaves[i] = local;
            task_nodes[i] = search.nodes();
          }
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    leaves += task_leaves[i];
    nodes += task_nodes[i];
  }
  return {BigInt(leaves), nodes, 0};
}

CountResult count_frontier_dp(const Region& r, int n, const DpOptions& options) {
  require_length(n);
  FrontierCounter counter(r, n, options.memo_cap);
  BigInt total = counter.count(initial_frontier(r));
  return {std::move(total), counter.nodes(), counter.entries()};
}

std::string_view to_string(TileabilityReason reason) noexcept {
  switch (reason) {
    case TileabilityReason::Divisibility: return "divisibility";
    case TileabilityReason::TauInfeasible: return "tau-infeasible";
    case TileabilityReason::Search: return "search";
  }
  return "unknown";
}

Tileability check_tileable(const Region& r, int n) {
  require_length(n);
  if (r.area() % n != 0) return {false, TileabilityReason::Divisibility};
  if (!compute_tau(level_profile(r), n)) return {false, TileabilityReason::TauInfeasible};
  bool found = false;
  Hooks hooks;
  hooks.leaf = [&found](const std::vector<Cell>&) {
    found = true;
    return false;
  };
  RootSearch(r, n, hooks).run_from_start();
  return {found, TileabilityReason::Search};
}

void for_each_pruned_branch(const Region& r, int n, const std::function<bool(const PrunedBranch&)>& visit) {
  require_length(n);
  Hooks hooks;
  hooks.prune = [&](const std::vector<Cell>& path, const FrontierState& state) {
    return visit(PrunedBranch{path, state});
  };
  RootSearch(r, n, hooks).run_from_start();
}

}  // namespace ribbonlab
