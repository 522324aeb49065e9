#include <random>

#include "coto/errors.hpp"
#include "coto/generators.hpp"
#include "coto/partition.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace coto;
using u128 = unsigned __int128;

namespace {

SplitResult split(std::vector<u64> values, u64 t) { return balanced_split(values, t); }

void check_partition(const std::vector<u64>& values, const SplitResult& s) {
  std::vector<int> seen(values.size(), 0);
  u64 pa = 1, pb = 1;
  for (std::size_t i : s.group_a) {
    ++seen[i];
    pa *= values[i];
  }
  for (std::size_t i : s.group_b) {
    ++seen[i];
    pb *= values[i];
  }
  for (int x : seen) REQUIRE(x == 1);
  REQUIRE(pa == s.product_a);
  REQUIRE(pb == s.product_b);
}

}  // namespace

TEST_CASE("examples") {
  const SplitResult a = split({4, 3}, 4);
  CHECK(a.product_a == 4);
  CHECK(a.product_b == 3);
  CHECK(within_split_bound(a, 4));

  const SplitResult b = split({5}, 5);
  CHECK(b.product_a == 5);
  CHECK(b.product_b == 1);
  CHECK(within_split_bound(b, 5));

  const SplitResult c = split({2, 3, 5, 7}, 7);
  CHECK(c.group_a == std::vector<std::size_t>{0, 3});
  CHECK(c.group_b == std::vector<std::size_t>{1, 2});
  CHECK(c.product_a == 14);
  CHECK(c.product_b == 15);
  CHECK(c.exact);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(split({}, 5), DomainError);
  CHECK_THROWS_AS(split({3, 9}, 5), PreconditionError);
  CHECK_THROWS_AS(split({0}, 5), PreconditionError);
  CHECK_THROWS_AS(split(std::vector<u64>(5, u64{1} << 20), u64{1} << 20), ArithmeticError);
}

TEST_CASE("exact split is optimal and balanced") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 3000; ++i) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
    const u64 t = std::uniform_int_distribution<u64>(1, 60)(rng);
    std::vector<u64> values(k);
    for (auto& v : values) v = std::uniform_int_distribution<u64>(1, t)(rng);
    const SplitResult s = balanced_split(values, t);
    check_partition(values, s);
    REQUIRE(s.exact);
    REQUIRE(s.larger() == oracle::best_split_max(values));
    REQUIRE(within_split_bound(s, t));
    REQUIRE(balanced_split(values, t).group_a == s.group_a);

    // Moving one element from the larger side never gives a strictly better ratio.
    const bool a_larger = s.product_a >= s.product_b;
    const u64 L = a_larger ? s.product_a : s.product_b;
    const u64 S = a_larger ? s.product_b : s.product_a;
    for (std::size_t idx : a_larger ? s.group_a : s.group_b) {
      const u64 x = values[idx];
      const u128 l2 = L / x, s2 = static_cast<u128>(S) * x;
      const u128 hi = l2 > s2 ? l2 : s2, lo = l2 > s2 ? s2 : l2;
      REQUIRE(hi * S >= static_cast<u128>(L) * lo);
    }
  }
}

TEST_CASE("greedy fallback keeps the bound") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(25, 40)(rng);
    const u64 t = std::uniform_int_distribution<u64>(2, 3)(rng);  // 3^40 fits in 64 bits
    std::vector<u64> values(k);
    for (auto& v : values) v = std::uniform_int_distribution<u64>(1, t)(rng);
    const SplitResult s = balanced_split(values, t);
    check_partition(values, s);
    REQUIRE_FALSE(s.exact);
    REQUIRE(within_split_bound(s, t));
  }
}

TEST_CASE("random multisets from the generator") {
  std::mt19937_64 rng(20);
  for (int i = 0; i < 5000; ++i) {
    const FactorMultiset ms = random_factor_multiset(rng);
    REQUIRE(ms.values.size() >= 1);
    REQUIRE(ms.values.size() <= 12);
    for (u64 v : ms.values) REQUIRE(v <= ms.t);
    const SplitResult s = balanced_split(ms.values, ms.t);
    check_partition(ms.values, s);
    REQUIRE(within_split_bound(s, ms.t));
  }
}
