#include "ribbonlab/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "ribbonlab/enumerate.hpp"
#include "ribbonlab/errors.hpp"

namespace ribbonlab {

namespace {

int tile_count(int area, int n) {
  if (n < 2) throw std::invalid_argument("ribbon length must be >= 2");
  if (area < 0 || area % n != 0)
    throw std::invalid_argument("area " + std::to_string(area) + " is not divisible by " + std::to_string(n));
  return area / n;
}

}  // namespace

double log2_big(const BigInt& value) {
  if (value <= 0) throw std::domain_error("log2 of a non-positive integer");
  const auto bits = boost::multiprecision::msb(value);
  if (bits < 1000) return std::log2(value.convert_to<double>());
  const auto shift = bits - 60;
  const BigInt top = value >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

double per_tile_entropy(const BigInt& count, int area, int n) {
  const int tiles = tile_count(area, n);
  if (count == 0) throw UndefinedEntropy("entropy is undefined for a region without tilings");
  if (count < 0) throw std::invalid_argument("negative tiling count");
  return log2_big(count) / tiles;
}

BigInt theorem1_bound(int area, int n) {
  return boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(tile_count(area, n)));
}

BigInt binomial_bound(int area, int n) {
  const int k = tile_count(area, n);
  BigInt c = 1;
  for (int i = 1; i <= k; ++i) c = c * (area - k + i) / i;
  return c;
}

std::vector<int> balanced_split(int s, int t) {
  if (t < 1 || t > s) throw std::invalid_argument("balanced_split needs 1 <= t <= s");
  const int q = s / t;
  const int rem = s % t;
  std::vector<int> x(static_cast<std::size_t>(t), q);
  for (int i = 0; i < rem; ++i) ++x[static_cast<std::size_t>(i)];
  return x;
}

LevelBound level_product_bound(const LevelProfile& profile, const TauProfile& tau) {
  if (profile.sigma.size() != tau.tau.size()) throw std::invalid_argument("sigma and tau lengths differ");
  LevelBound out{1, {}};
  for (std::size_t l = 0; l < tau.tau.size(); ++l) {
    const int t = tau.tau[l];
    const int s = profile.sigma[l];
    if (t < 0 || t > s) throw std::invalid_argument("infeasible tau at level " + std::to_string(l));
    if (t == 0) {
      out.factors.emplace_back();
      continue;
    }
    auto x = balanced_split(s, t);
    for (int v : x) out.value *= v;
    out.factors.push_back(std::move(x));
  }
  return out;
}

BoundReport make_bound_report(std::string region_id, const Region& r, int n, std::optional<BigInt> count) {
  BoundReport rep;
  rep.region_id = std::move(region_id);
  rep.n = n;
  rep.area = r.area();
  rep.tiles = tile_count(r.area(), n);
  rep.theorem1 = theorem1_bound(r.area(), n);
  rep.binomial = binomial_bound(r.area(), n);
  const auto profile = level_profile(r);
  if (auto tau = compute_tau(profile, n)) rep.level_bound = level_product_bound(profile, *tau);
  if (count) {
    if (*count > 0) rep.entropy = per_tile_entropy(*count, r.area(), n);
    rep.count = std::move(count);
  }
  return rep;
}

nlohmann::json to_json(const BoundReport& report) {
  nlohmann::json j;
  j["region"] = report.region_id;
  j["n"] = report.n;
  j["area"] = report.area;
  j["tiles"] = report.tiles;
  j["count"] = report.count ? nlohmann::json(report.count->str()) : nlohmann::json(nullptr);
  j["entropy"] = report.entropy ? nlohmann::json(*report.entropy) : nlohmann::json(nullptr);
  if (report.level_bound) {
    j["level_product_bound"] = report.level_bound->value.str();
    j["level_factors"] = report.level_bound->factors;
  } else {
    j["level_product_bound"] = nullptr;
    j["level_factors"] = nullptr;
  }
  j["theorem1_bound"] = report.theorem1.str();
  j["binomial_bound"] = report.binomial.str();
  j["entropy_upper_bound"] = std::log2(static_cast<double>(report.n));
  return j;
}

CorpusReport corpus_entropy_report(const std::vector<std::pair<std::string, Region>>& regions, int n,
                                   unsigned threads) {
  CorpusReport rep;
  rep.n = n;
  rep.upper_bound = std::log2(static_cast<double>(n));
  rep.entries.resize(regions.size());

  auto evaluate = [&](std::size_t i) {
    const auto& [id, region] = regions[i];
    BigInt count = count_frontier_dp(region, n).count;
    if (count == 0) throw std::invalid_argument("region '" + id + "' has no " + std::to_string(n) + "-ribbon tiling");
    rep.entries[i] = {id, region.area(), count, per_tile_entropy(count, region.area(), n)};
  };
  if (threads <= 1) {
    for (std::size_t i = 0; i < regions.size(); ++i) evaluate(i);
  } else {
    std::vector<std::exception_ptr> errors(regions.size());
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
          for (std::size_t i = w; i < regions.size(); i += threads) {
            try {
              evaluate(i);
            } catch (...) {
              errors[i] = std::current_exception();
            }
          }
        });
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  for (const auto& e : rep.entries) {
    if (!rep.max_entropy || e.entropy > *rep.max_entropy) {
      rep.max_entropy = e.entropy;
      rep.argmax = e.id;
    }
    // Exact form of entropy <= log2 n.
    if (e.count > theorem1_bound(e.area, n)) rep.bound_holds = false;
  }
  return rep;
}

nlohmann::json to_json(const CorpusReport& report) {
  nlohmann::json j;
  j["n"] = report.n;
  j["entropy_upper_bound"] = report.upper_bound;
  j["bound_holds"] = report.bound_holds;
  j["max_entropy"] = report.max_entropy ? nlohmann::json(*report.max_entropy) : nlohmann::json(nullptr);
  j["argmax"] = report.argmax ? nlohmann::json(*report.argmax) : nlohmann::json(nullptr);
  j["tau_lower_bound"] = j["max_entropy"];
  auto& rows = j["regions"] = nlohmann::json::array();
  for (const auto& e : report.entries)
    rows.push_back({{"region", e.id}, {"area", e.area}, {"count", e.count.str()}, {"entropy", e.entropy}});
  return j;
}

}  // namespace ribbonlab
