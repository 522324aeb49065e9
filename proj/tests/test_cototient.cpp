#include <random>
#include <set>
#include <sstream>

#include "coto/arith.hpp"
#include "coto/cototient.hpp"
#include "coto/errors.hpp"
#include "coto/io.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace coto;

TEST_CASE("oracle examples") {
  const auto o = oracle_solutions(10);
  CHECK(o.at(2) == std::vector<u64>{4});
  CHECK(o.at(8) == std::vector<u64>{12, 14, 16});
  CHECK(o.at(10).empty());
  CHECK_THROWS_AS(oracle_solutions(kOracleCap + 1), ResourceError);
}

TEST_CASE("oracle against gcd-count brute force") {
  const auto o = oracle_solutions(60);
  for (u64 c = 2; c <= 60; ++c) REQUIRE(o.at(c) == oracle::cototient_solutions(c));
}

TEST_CASE("solve examples") {
  CHECK(solve(8) == std::vector<u64>{12, 14, 16});
  CHECK(solve(5) == std::vector<u64>{25});
  CHECK(solve(2) == std::vector<u64>{4});
  CHECK(solve(10).empty());
  CHECK(solve(30) == std::vector<u64>{42, 50, 58});
  CHECK_THROWS_AS(solve(1), DomainError);
  CHECK_THROWS_AS(solve(0), DomainError);
}

TEST_CASE("solve matches oracle up to 800") {
  constexpr u64 kMax = 800;
  const auto o = oracle_solutions(kMax);
  const CototientSolver solver(kMax);
  for (u64 c = 2; c <= kMax; ++c) {
    REQUIRE(solver.solve(c) == o.at(c));
    for (const auto& r : solver.solve_records(c)) {
      REQUIRE(r.c == c);
      REQUIRE(cototient(r.n) == c);
      REQUIRE(r.factorization.product() == r.n);
    }
  }
  CHECK_THROWS_AS(solver.solve(kMax + 1), PreconditionError);
}

TEST_CASE("solve beyond the shared solver") {
  std::mt19937_64 rng(2);
  const CototientSolver big(20000);
  for (int i = 0; i < 20; ++i) {
    const u64 c = std::uniform_int_distribution<u64>(2, 20000)(rng);
    REQUIRE(solve(c) == big.solve(c));
  }
}

TEST_CASE("solve_primal") {
  CHECK(solve_primal(8) == std::vector<u64>{16});
  CHECK(solve_primal(9) == std::vector<u64>{27});
  CHECK(solve_primal(6).empty());
  CHECK(solve_primal(2) == std::vector<u64>{4});
  for (u64 c = 2; c <= 3000; ++c) {
    const auto primal = solve_primal(c);
    REQUIRE(primal.size() <= 1);
    for (u64 n : primal) REQUIRE(cototient(n) == c);
  }
}

TEST_CASE("goldbach_count") {
  CHECK(goldbach_count(5) == 1);
  CHECK(goldbach_count(10) == 2);
  CHECK(goldbach_count(4) == 1);
  CHECK(goldbach_count(2) == 0);
  CHECK(goldbach_count(3) == 0);
  CHECK_THROWS_AS(goldbach_count(1), DomainError);
  const CototientSolver solver(500);
  for (u64 k = 2; k <= 501; ++k) {
    u64 brute = 0;
    for (u64 p = 2; 2 * p <= k; ++p) brute += oracle::is_prime(p) && oracle::is_prime(k - p);
    REQUIRE(goldbach_count(k) == brute);
    REQUIRE(solver.goldbach_count(k) == brute);
    if (k % 2 == 1) REQUIRE(brute == (oracle::is_prime(k - 2) ? 1u : 0u));
  }
}

TEST_CASE("solve_given_B") {
  CHECK(solve_given_B(2, 30) == std::vector<u64>{42});
  CHECK(solve_given_B(2, 8).empty());
  CHECK_THROWS_AS(solve_given_B(1, 30), DomainError);
  for (u64 B = 2; B <= 30; ++B) {
    for (u64 c = 2; c <= 400; ++c) {
      for (u64 n : solve_given_B(B, c)) {
        REQUIRE(cototient(n) == c);
        REQUIRE(n % B == 0);
        const auto f = factorize(n / B);
        REQUIRE(f.parts.size() == 2);
        for (const auto& pp : f.parts) {
          REQUIRE(pp.exponent == 1);
          REQUIRE(B % pp.prime != 0);
        }
      }
    }
  }
  CHECK(bpq_identity(2, 3, 7, 30).holds());
  CHECK_FALSE(bpq_identity(2, 3, 7, 31).holds());
}

TEST_CASE("classify") {
  const CototientSolver solver(30);
  const auto c8 = classify(solver.solve_records(8));
  CHECK(c8.histogram == std::map<std::size_t, u64>{{1, 1}, {2, 2}});
  CHECK(c8.squarefree == std::map<std::size_t, u64>{{2, 1}});
  CHECK(c8.total() == 3);
  CHECK(classify({}).histogram.empty());
  const auto c30 = classify(solver.solve_records(30));
  CHECK(c30.squarefree.at(3) == 1);
}

TEST_CASE("scan rows") {
  const ScanResult r = scan(2, 40);
  REQUIRE(r.rows.size() == 39);
  const ScanRow& row8 = r.rows[6];
  CHECK(row8.c == 8);
  CHECK(row8.T == 3);
  CHECK(row8.G == 1);
  CHECK(row8.residual == 2);
  CHECK(row8.histogram == std::map<std::size_t, u64>{{1, 1}, {2, 2}});
  CHECK(row8.max_n == 16);
  const ScanRow& row2 = r.rows[0];
  CHECK(row2.T == 1);
  CHECK(row2.G == 0);
  CHECK(row2.residual == 1);
  for (const auto& row : r.rows) {
    if (row.c % 2 == 0) CHECK(row.G <= 1);
    CHECK(row.residual >= -1);
    u64 sum = 0;
    for (const auto& [k, v] : row.histogram) sum += v;
    CHECK(sum == row.T);
  }
  CHECK(r.summary.min_residual >= -1);
}

TEST_CASE("scan validation") {
  CHECK_THROWS_AS(scan(1, 10), DomainError);
  CHECK_THROWS_AS(scan(10, 5), DomainError);
  CHECK_THROWS_AS(scan(2, kScanDeskCap + 1), ResourceError);
}

TEST_CASE("scan summary blocks") {
  const ScanResult r = scan(2, 3000);
  const auto& blocks = r.summary.blocks;
  REQUIRE(blocks.size() == 11);  // j = 1 .. 11
  CHECK(blocks.front().j == 1);
  CHECK(blocks.front().lo == 2);
  CHECK(blocks.front().hi == 3);
  CHECK(blocks.back().j == 11);
  CHECK(blocks.back().lo == 2048);
  CHECK(blocks.back().hi == 3000);
  for (const auto& b : blocks) {
    std::int64_t best = INT64_MIN;
    for (const auto& row : r.rows) {
      if (row.c >= b.lo && row.c <= b.hi) best = std::max(best, row.residual);
    }
    CHECK(b.max_residual == best);
  }
  CHECK(r.summary.slope.has_value());
}

TEST_CASE("scan determinism across workers") {
  ScanOptions one;
  one.keep_solutions = true;
  ScanOptions many = one;
  many.workers = 5;
  std::ostringstream a, b;
  const ScanResult ra = scan(2, 3000, one);
  const ScanResult rb = scan(2, 3000, many);
  write_scan_table(a, ra.rows);
  write_solution_pairs(a, ra.rows);
  write_scan_summary(a, ra.summary);
  write_scan_table(b, rb.rows);
  write_solution_pairs(b, rb.rows);
  write_scan_summary(b, rb.summary);
  CHECK(a.str() == b.str());
}

TEST_CASE("structure identities up to 2000") {
  constexpr u64 kMax = 2000;
  const CototientSolver solver(kMax);
  for (u64 c = 2; c <= kMax; ++c) {
    const auto records = solver.solve_records(c);
    std::set<u64> two_prime;
    std::vector<u64> prime_powers;
    for (const auto& r : records) {
      for (const auto& pp : r.factorization.parts) {
        if (pp.exponent == 1) REQUIRE(r.n / pp.prime < c);
      }
      if (c % 2 == 0) REQUIRE((c < r.n && r.n <= 2 * c));
      if (r.primal_count() == 2 && r.squarefree()) two_prime.insert(r.n);
      if (r.primal_count() == 1) prime_powers.push_back(r.n);
    }
    std::set<u64> from_pairs;
    for (u64 p = 2; 2 * p < c + 1; ++p) {
      if (oracle::is_prime(p) && oracle::is_prime(c + 1 - p)) from_pairs.insert(p * (c + 1 - p));
    }
    REQUIRE(two_prime == from_pairs);
    REQUIRE(solve_primal(c) == prime_powers);
    const u64 T = records.size();
    REQUIRE(T + 1 >= solver.goldbach_count(c + 1));
  }
}
