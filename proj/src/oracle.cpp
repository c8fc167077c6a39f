#include "ribbonlab/oracle.hpp"

#include <stdexcept>

namespace ribbonlab {

namespace {

class Backtracker {
 public:
  Backtracker(const Region& r, int n, const std::function<bool(const std::vector<Ribbon>&)>& leaf)
      : r_(r), n_(n), leaf_(leaf), covered_(static_cast<std::size_t>(r.area()), 0) {
    // 'R' sorts before 'U'.
    for (unsigned w = 0; w < (1U << (n - 1)); ++w) {
      std::vector<Step> word;
      for (int i = n - 2; i >= 0; --i) word.push_back(((w >> i) & 1U) ? Step::Up : Step::Right);
      words_.push_back(std::move(word));
    }
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

  bool search(std::size_t first_free) {
    ++nodes_;
    while (first_free < covered_.size() && covered_[first_free]) ++first_free;
    if (first_free == covered_.size()) return leaf_(placed_);

    const Cell root = r_.cells()[first_free];
    std::vector<int> idx(static_cast<std::size_t>(n_));
    for (const auto& word : words_) {
      Cell c = root;
      idx[0] = static_cast<int>(first_free);
      bool fits = true;
      for (std::size_t k = 0; k < word.size() && fits; ++k) {
        c = word[k] == Step::Up ? Cell{c.x, c.y + 1} : Cell{c.x + 1, c.y};
        const int i = r_.index_of(c);
        fits = i >= 0 && !covered_[static_cast<std::size_t>(i)];
        idx[k + 1] = i;
      }
      if (!fits) continue;
      for (int i : idx) covered_[static_cast<std::size_t>(i)] = 1;
      placed_.push_back({root, word});
      const bool go_on = search(first_free + 1);
      placed_.pop_back();
      for (int i : idx) covered_[static_cast<std::size_t>(i)] = 0;
      if (!go_on) return false;
    }
    return true;
  }

 private:
  const Region& r_;
  int n_;
  const std::function<bool(const std::vector<Ribbon>&)>& leaf_;
  std::vector<char> covered_;
  std::vector<std::vector<Step>> words_;
  std::vector<Ribbon> placed_;
  std::uint64_t nodes_ = 0;
};

void require_length(int n) {
  if (n < 2 || n > 30) throw std::invalid_argument("oracle ribbon length must be in 2..30");
}

}  // namespace

void oracle_for_each(const Region& r, int n, const std::function<bool(const Tiling&)>& visit) {
  require_length(n);
  std::function<bool(const std::vector<Ribbon>&)> leaf = [&](const std::vector<Ribbon>& ribbons) {
    return visit(Tiling(r, ribbons));
  };
  Backtracker(r, n, leaf).search(0);
}

std::vector<Tiling> oracle_enumerate(const Region& r, int n) {
  std::vector<Tiling> out;
  oracle_for_each(r, n, [&](const Tiling& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

CountResult oracle_count(const Region& r, int n) {
  require_length(n);
  std::uint64_t leaves = 0;
  std::function<bool(const std::vector<Ribbon>&)> leaf = [&](const std::vector<Ribbon>&) {
    ++leaves;
    return true;
  };
  Backtracker bt(r, n, leaf);
  bt.search(0);
  return {BigInt(leaves), bt.nodes(), 0};
}

}  // namespace ribbonlab
