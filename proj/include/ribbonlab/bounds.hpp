#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ribbonlab/bigint.hpp"
#include "ribbonlab/region.hpp"
#include "ribbonlab/tiling.hpp"

namespace ribbonlab {

// log2(count) * n / area, in bits per tile. Throws UndefinedEntropy when
// count is 0 and std::invalid_argument when n does not divide area.
double per_tile_entropy(const BigInt& count, int area, int n);

double log2_big(const BigInt& value);

// n^(A/n)
BigInt theorem1_bound(int area, int n);
// C(A, A/n): the number of candidate root sets.
BigInt binomial_bound(int area, int n);

// Integers x_1..x_t >= 1 with sum at most s and the largest product: the
// balanced split, r = s mod t copies of floor(s/t)+1 and the rest floor(s/t).
// Requires 1 <= t <= s.
std::vector<int> balanced_split(int s, int t);

struct LevelBound {
  BigInt value;
  std::vector<std::vector<int>> factors;  // x^(l)_i per level; empty where tau_l = 0
};

// Product over levels of the best split of sigma_l among tau_l roots.
// Throws std::invalid_argument if some tau_l exceeds sigma_l or the profiles
// have different lengths.
LevelBound level_product_bound(const LevelProfile& profile, const TauProfile& tau);

struct BoundReport {
  std::string region_id;
  int n = 0;
  int area = 0;
  int tiles = 0;
  std::optional<BigInt> count;
  std::optional<double> entropy;
  std::optional<LevelBound> level_bound;  // absent when tau is infeasible
  BigInt theorem1;
  BigInt binomial;
};

// count is taken as given (may be absent).
BoundReport make_bound_report(std::string region_id, const Region& r, int n, std::optional<BigInt> count);
nlohmann::json to_json(const BoundReport& report);

struct CorpusEntry {
  std::string id;
  int area = 0;
  BigInt count;
  double entropy = 0.0;
};

struct CorpusReport {
  int n = 0;
  std::vector<CorpusEntry> entries;  // input order
  std::optional<double> max_entropy;
  std::optional<std::string> argmax;
  double upper_bound = 0.0;  // log2 n
  bool bound_holds = true;
};

// Counts every region with the frontier DP. Throws std::invalid_argument on an
// untileable region.
CorpusReport corpus_entropy_report(const std::vector<std::pair<std::string, Region>>& regions, int n,
                                   unsigned threads = 1);
nlohmann::json to_json(const CorpusReport& report);

}  // namespace ribbonlab
