#include "ribbonlab/runs.hpp"

#include <algorithm>
#include <stdexcept>

namespace ribbonlab {

FrontierState initial_frontier(const Region& r) {
  return {1, std::vector<int>(r.level_cells(0).size(), 0)};
}

char to_char(RunForm f) noexcept {
  switch (f) {
    case RunForm::A: return 'a';
    case RunForm::B: return 'b';
    case RunForm::C: return 'c';
  }
  return '?';
}

bool RunDecomposition::has_form_a() const noexcept {
  return std::any_of(runs.begin(), runs.end(), [](const Run& run) { return run.form == RunForm::A; });
}

int RunDecomposition::form_c_count() const noexcept {
  return static_cast<int>(std::count_if(runs.begin(), runs.end(), [](const Run& run) { return run.form == RunForm::C; }));
}

namespace {

void check_state(const Region& r, const FrontierState& state) {
  if (state.level < 1) throw std::invalid_argument("frontier level must be >= 1");
  if (state.ages.size() != r.level_cells(state.level - 1).size())
    throw std::invalid_argument("frontier ages do not match the squares of the level below");
}

}  // namespace

std::vector<Cell> end_squares(const Region& r, const FrontierState& state, int n) {
  check_state(r, state);
  const auto lower = r.level_cells(state.level - 1);
  std::vector<Cell> out;
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (state.ages[i] == n - 1) out.push_back(lower[i]);
  return out;
}

RunClass classify_run(std::span<const Cell> cells, int upper) {
  if (cells.empty()) throw std::invalid_argument("empty run");
  int d = 0;
  std::vector<Cell> a_set;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell c = cells[i];
    if (c.level() == upper) {
      ++d;
      a_set.push_back(c);
    } else if (c.level() == upper - 1) {
      --d;
    } else {
      throw std::invalid_argument("run cell outside the two-level band");
    }
    if (i > 0 && order_key(c, upper - 1) != order_key(cells[i - 1], upper - 1) + 1)
      throw std::invalid_argument("run cells are not key-consecutive");
  }
  const RunForm form = d < 0 ? RunForm::A : d == 0 ? RunForm::B : RunForm::C;
  return {form, d, std::move(a_set)};
}

RunDecomposition decompose_runs(const Region& r, const FrontierState& state, int n) {
  check_state(r, state);
  const int l = state.level;
  const int lower = l - 1;
  auto by_key = [lower](Cell a, Cell b) { return order_key(a, lower) < order_key(b, lower); };

  RunDecomposition out;
  out.level = l;
  const auto lower_cells = r.level_cells(lower);
  for (std::size_t i = 0; i < lower_cells.size(); ++i)
    (state.ages[i] == n - 1 ? out.blacks : out.whites).push_back(lower_cells[i]);
  for (const auto& c : r.level_cells(l)) out.whites.push_back(c);
  for (int bl : {lower, l})
    for (const auto& c : boundary_squares(r, bl)) out.blacks.push_back(c);
  std::sort(out.whites.begin(), out.whites.end(), by_key);
  std::sort(out.blacks.begin(), out.blacks.end(), by_key);

  std::size_t start = 0;
  for (std::size_t i = 1; i <= out.whites.size(); ++i) {
    if (i < out.whites.size() && order_key(out.whites[i], lower) == order_key(out.whites[i - 1], lower) + 1) continue;
    Run run;
    run.cells.assign(out.whites.begin() + static_cast<std::ptrdiff_t>(start),
                     out.whites.begin() + static_cast<std::ptrdiff_t>(i));
    auto cls = classify_run(run.cells, l);
    run.d = cls.d;
    run.form = cls.form;
    run.a_set = std::move(cls.a_set);
    out.runs.push_back(std::move(run));
    start = i;
  }
  return out;
}

FrontierState advance_frontier(const Region& r, const RunDecomposition& runs, const FrontierState& state,
                               std::span<const Cell> roots, int n) {
  check_state(r, state);
  if (n < 2) throw std::invalid_argument("ribbon length must be >= 2");
  if (runs.level != state.level) throw std::invalid_argument("decomposition and state levels differ");
  const int l = state.level;
  FrontierState next{l + 1, std::vector<int>(r.level_cells(l).size(), -1)};

  std::size_t choice = 0;
  for (const auto& run : runs.runs) {
    if (run.form == RunForm::A) throw std::invalid_argument("cannot advance past a form-a run");
    const Cell* root = nullptr;
    if (run.form == RunForm::C) {
      if (choice >= roots.size()) throw std::invalid_argument("too few root choices");
      root = &roots[choice++];
      if (std::find(run.a_set.begin(), run.a_set.end(), *root) == run.a_set.end())
        throw std::invalid_argument("root choice outside its run");
      next.ages[static_cast<std::size_t>(r.index_in_level(*root))] = 0;
    }
    std::vector<int> continuing;
    std::vector<Cell> targets;
    for (const auto& c : run.cells) {
      if (c.level() == l - 1) continuing.push_back(state.ages[static_cast<std::size_t>(r.index_in_level(c))]);
      else if (root == nullptr || !(c == *root)) targets.push_back(c);
    }
    for (std::size_t i = 0; i < targets.size(); ++i)
      next.ages[static_cast<std::size_t>(r.index_in_level(targets[i]))] = continuing[i] + 1;
  }
  if (choice != roots.size()) throw std::invalid_argument("too many root choices");
  if (std::find(next.ages.begin(), next.ages.end(), -1) != next.ages.end())
    throw std::logic_error("advance_frontier left a square uncovered");
  return next;
}

}  // namespace ribbonlab
