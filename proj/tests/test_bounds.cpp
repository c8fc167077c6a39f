#include <doctest.h>

#include <cmath>
#include <functional>

#include "ribbonlab/bounds.hpp"
#include "ribbonlab/enumerate.hpp"
#include "ribbonlab/errors.hpp"
#include "support/corpus.hpp"

using namespace ribbonlab;

namespace {

// Largest product of t positive integers with sum at most s, by brute force.
long long best_product(int s, int t) {
  long long best = 0;
  std::function<void(int, int, long long)> go = [&](int left, int parts, long long prod) {
    if (parts == 0) {
      best = std::max(best, prod);
      return;
    }
    for (int x = 1; x <= left - (parts - 1); ++x) go(left - x, parts - 1, prod * x);
  };
  go(s, t, 1);
  return best;
}

}  // namespace

TEST_CASE("per_tile_entropy") {
  CHECK(per_tile_entropy(2, 4, 2) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(per_tile_entropy(6, 9, 3) == doctest::Approx(std::log2(6.0) / 3));
  CHECK(per_tile_entropy(6, 9, 3) == doctest::Approx(0.8617).epsilon(1e-4));
  CHECK(per_tile_entropy(1, 12, 3) == 0.0);
  CHECK_THROWS_AS(per_tile_entropy(0, 4, 2), UndefinedEntropy);
  CHECK_THROWS_AS(per_tile_entropy(3, 5, 2), std::invalid_argument);
}

TEST_CASE("log2_big on large integers") {
  const BigInt big = BigInt(1) << 5000;
  CHECK(log2_big(big) == doctest::Approx(5000.0));
  CHECK(log2_big(big * 3) == doctest::Approx(5000.0 + std::log2(3.0)));
  CHECK_THROWS(log2_big(0));
}

TEST_CASE("theorem1_bound and binomial_bound") {
  CHECK(theorem1_bound(4, 2) == 4);
  CHECK(theorem1_bound(9, 3) == 27);
  CHECK(theorem1_bound(12, 3) == 81);
  CHECK(binomial_bound(4, 2) == 6);
  CHECK(binomial_bound(9, 3) == 84);
  CHECK(binomial_bound(6, 3) == 15);
  CHECK(theorem1_bound(200, 2) == BigInt(1) << 100);
  CHECK_THROWS_AS(theorem1_bound(5, 2), std::invalid_argument);
  CHECK_THROWS_AS(binomial_bound(7, 3), std::invalid_argument);
}

TEST_CASE("binomial bound dominates every area-6 corpus count") {
  for (const auto& item : testing::test_corpus())
    if (item.region.area() == 6 && item.n == 3) CHECK(count_dfs(item.region, 3).count <= 15);
}

TEST_CASE("balanced split matches exhaustive composition search") {
  for (int s = 1; s <= 12; ++s)
    for (int t = 1; t <= s; ++t) {
      const auto x = balanced_split(s, t);
      long long prod = 1;
      int sum = 0;
      for (int v : x) {
        CHECK(v >= 1);
        prod *= v;
        sum += v;
      }
      CHECK(sum == s);
      CHECK(prod == best_product(s, t));
    }
  CHECK_THROWS_AS(balanced_split(2, 3), std::invalid_argument);
}

TEST_CASE("level_product_bound examples") {
  auto sq2 = level_product_bound({{1, 2, 1}}, {{1, 1, 0}});
  CHECK(sq2.value == 2);
  CHECK(sq2.factors[1] == std::vector<int>{2});
  CHECK(sq2.factors[2].empty());
  CHECK(level_product_bound({{1, 2, 3, 2, 1}}, {{1, 1, 1, 0, 0}}).value == 6);
  CHECK(level_product_bound({{1, 1, 1}}, {{1, 0, 0}}).value == 1);
  CHECK_THROWS_AS(level_product_bound({{1, 2}}, {{1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(level_product_bound({{1, 2}}, {{1}}), std::invalid_argument);
}

TEST_CASE("bound chain on small corpus regions") {
  for (const auto& item : testing::test_corpus()) {
    if (item.region.area() > 16) continue;
    const BigInt count = count_frontier_dp(item.region, item.n).count;
    const auto rep = make_bound_report(item.id, item.region, item.n, count);
    CHECK(count <= rep.theorem1);
    CHECK(count <= rep.binomial);
    if (rep.level_bound) {
      CHECK(count <= rep.level_bound->value);
      CHECK(rep.level_bound->value <= rep.theorem1);
    } else {
      CHECK(count == 0);
    }
    CHECK(rep.entropy.has_value() == (count > 0));
  }
}

TEST_CASE("bound report JSON") {
  const auto j = to_json(make_bound_report("sq3", gen_rectangle(3, 3), 3, BigInt(6)));
  CHECK(j["count"] == "6");
  CHECK(j["tiles"] == 3);
  CHECK(j["theorem1_bound"] == "27");
  CHECK(j["binomial_bound"] == "84");
  CHECK(j["level_product_bound"] == "6");
  CHECK(j["entropy"].get<double>() == doctest::Approx(std::log2(6.0) / 3));
  const auto none = to_json(make_bound_report("sq3", gen_rectangle(3, 3), 3, std::nullopt));
  CHECK(none["count"].is_null());
  CHECK(none["entropy"].is_null());
}

TEST_CASE("corpus_entropy_report") {
  const auto rep = corpus_entropy_report({{"sq3", gen_rectangle(3, 3)}}, 3);
  REQUIRE(rep.max_entropy.has_value());
  CHECK(*rep.max_entropy == doctest::Approx(std::log2(6.0) / 3));
  CHECK(rep.upper_bound == doctest::Approx(1.585).epsilon(1e-3));
  CHECK(rep.bound_holds);

  const auto two = corpus_entropy_report({{"sq2", gen_rectangle(2, 2)}, {"bar", gen_rectangle(2, 1)}}, 2);
  CHECK(*two.max_entropy == doctest::Approx(0.5));
  CHECK(*two.argmax == "sq2");
  CHECK(two.entries[1].entropy == 0.0);

  const auto empty = corpus_entropy_report({}, 2);
  CHECK_FALSE(empty.max_entropy.has_value());
  CHECK(to_json(empty)["max_entropy"].is_null());
  CHECK(to_json(empty)["regions"].empty());

  CHECK_THROWS_AS(corpus_entropy_report({{"l", testing::region_from({{0, 0}, {1, 0}, {0, 1}})}}, 3),
                  std::invalid_argument);

  std::vector<std::pair<std::string, Region>> many;
  for (int k = 1; k <= 3; ++k) many.emplace_back("az" + std::to_string(k), gen_aztec(k));
  const auto seq = to_json(corpus_entropy_report(many, 2));
  CHECK(to_json(corpus_entropy_report(many, 2, 3)) == seq);
}
