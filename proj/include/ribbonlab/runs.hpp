#pragma once

#include <span>
#include <vector>

#include "ribbonlab/region.hpp"

namespace ribbonlab {

// Summary of a partial tiling that is fixed on all levels below `level`:
// ages[i] = (level - 1) - root level of the tile covering the i-th square
// of level - 1 (in x order). Together with the region this determines every
// continuation, so it doubles as a memo key.
struct FrontierState {
  int level = 0;
  std::vector<int> ages;

  friend bool operator==(const FrontierState&, const FrontierState&) = default;
};

// Level-0 squares are always roots; this is the state at boundary 1.
FrontierState initial_frontier(const Region& r);

enum class RunForm { A, B, C };

char to_char(RunForm f) noexcept;

struct Run {
  std::vector<Cell> cells;   // key order
  int d = 0;                 // upper-level count minus lower-level count
  RunForm form = RunForm::B;
  std::vector<Cell> a_set;   // the upper-level cells of the run
};

struct RunDecomposition {
  int level = 0;
  std::vector<Cell> whites;  // key order
  std::vector<Cell> blacks;  // key order
  std::vector<Run> runs;     // left to right

  bool has_form_a() const noexcept;
  int form_c_count() const noexcept;
};

// Squares of level - 1 covered by tiles that end there (age n - 1).
std::vector<Cell> end_squares(const Region& r, const FrontierState& state, int n);

// White squares are the unfinished lower-level squares plus every upper-level
// square; black squares are the finished ones plus the boundary squares of
// both levels. Lattice positions that are neither also split runs.
RunDecomposition decompose_runs(const Region& r, const FrontierState& state, int n);

struct RunClass {
  RunForm form;
  int d;
  std::vector<Cell> a_set;
};

// Classifies a key-consecutive, level-alternating run between levels
// upper - 1 and upper. Throws std::invalid_argument otherwise.
RunClass classify_run(std::span<const Cell> cells, int upper);

// State at level + 1 after choosing one root (a member of its a_set) for
// each form-c run, left to right. Continuing tiles are matched in order to
// the non-root upper squares of their own run. Throws std::invalid_argument
// on a form-a decomposition or on a bad choice.
FrontierState advance_frontier(const Region& r, const RunDecomposition& runs, const FrontierState& state,
                               std::span<const Cell> roots, int n);

}  // namespace ribbonlab
