#pragma once

// Solutions of n - phi(n) = c.
//
// Every composite n with smallest prime p has n - phi(n) >= n/p >= sqrt(n),
// so for c >= 2 all solutions lie in [4, c^2]. Two routes cover that range:
//   * n with some prime p of multiplicity one: n = A p, gcd(A, p) = 1 and
//     c = (A - phi(A)) p + phi(A), which forces A < c and pins p given A;
//   * powerful n (every exponent >= 2), enumerated as a^2 b^3 with b squarefree.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "coto/arith.hpp"

namespace coto {

struct SolutionRecord {
  u64 c = 0;
  u64 n = 0;
  Factorization factorization;

  std::size_t primal_count() const { return factorization.parts.size(); }
  bool squarefree() const { return factorization.squarefree(); }
};

/// Largest c accepted by scan without an explicit override.
inline constexpr u64 kScanDeskCap = 100000;
/// Largest c_max accepted by oracle_solutions.
inline constexpr u64 kOracleCap = 3000;

/// Shared, immutable tables for solving every c up to c_max. Safe to use
/// from several threads at once.
class CototientSolver {
 public:
  /// Throws ResourceError when the tables would exceed the factor table budget.
  explicit CototientSolver(u64 c_max, u64 budget = kDefaultTableBudget);

  u64 c_max() const { return c_max_; }
  const FactorTable& table() const { return *table_; }

  /// Sorted solutions with factorizations. Throws DomainError for c < 2 and
  /// PreconditionError for c > c_max.
  std::vector<SolutionRecord> solve_records(u64 c) const;
  std::vector<u64> solve(u64 c) const;

  /// Unordered prime pairs p <= q with p + q = k (k >= 2, k <= c_max + 1).
  u64 goldbach_count(u64 k) const;

 private:
  u64 c_max_;
  std::shared_ptr<const FactorTable> table_;
  std::vector<std::uint32_t> phi_;
  // Powerful n <= c_max^2 bucketed by n - phi(n) <= c_max.
  std::vector<std::vector<SolutionRecord>> powerful_by_cototient_;
};

/// Builds a solver sized for c. Throws DomainError for c < 2.
std::vector<u64> solve(u64 c);

/// Independent brute force over n <= c_max^2 with a totient sieve; maps
/// every 2 <= c <= c_max to its sorted solutions (possibly empty).
/// Throws ResourceError when c_max > kOracleCap or c_max < 2.
std::map<u64, std::vector<u64>> oracle_solutions(u64 c_max);

/// Solutions that are prime powers: n = p * c when c = p^k, k >= 1.
std::vector<u64> solve_primal(u64 c);

/// Unordered prime pairs p <= q with p + q = k. Throws DomainError for k < 2.
u64 goldbach_count(u64 k, const FactorTable* table = nullptr);

/// All n = B p q (p < q primes, neither dividing B) with n - phi(n) = c, found
/// by factoring M = (B - phi(B)) c + B phi(B) as
/// ((B - phi(B)) p + phi(B)) ((B - phi(B)) q + phi(B)).
/// Throws DomainError for B < 2 or c < 2.
std::vector<u64> solve_given_B(u64 B, u64 c, const FactorTable* table = nullptr);

/// Both sides of the product identity for n = B p q, used to check it holds.
struct BpqIdentity {
  unsigned __int128 lhs = 0;
  unsigned __int128 rhs = 0;
  bool holds() const { return lhs == rhs; }
};
BpqIdentity bpq_identity(u64 B, u64 p, u64 q, u64 c);

struct Classification {
  std::map<std::size_t, u64> histogram;   // primal_count -> solutions
  std::map<std::size_t, u64> squarefree;  // k -> |M_k|
  u64 total() const;
};

Classification classify(const std::vector<SolutionRecord>& solutions);

struct ScanRow {
  u64 c = 0;
  u64 T = 0;
  u64 G = 0;
  std::int64_t residual = 0;  // T - G
  std::map<std::size_t, u64> histogram;
  u64 max_n = 0;
  std::vector<u64> solutions;  // filled only when requested
};

struct DyadicBlock {
  unsigned j = 0;  // block covers [2^j, 2^(j+1)) intersected with the scan range
  u64 lo = 0;
  u64 hi = 0;
  std::int64_t max_residual = 0;
  u64 argmax_c = 0;
  double midpoint() const { return 0.5 * (static_cast<double>(lo) + static_cast<double>(hi)); }
};

struct ScanSummary {
  u64 c_from = 0;
  u64 c_to = 0;
  std::vector<DyadicBlock> blocks;
  unsigned slope_from_block = 8;
  /// Least-squares slope of log(max_residual + 1) on log(midpoint) over blocks
  /// j >= slope_from_block; absent with fewer than two such blocks.
  std::optional<double> slope;
  std::int64_t min_residual = 0;
  u64 total_solutions = 0;
};

struct ScanOptions {
  unsigned workers = 1;
  bool keep_solutions = false;
  bool allow_large = false;
  unsigned slope_from_block = 8;
};

struct ScanResult {
  std::vector<ScanRow> rows;  // ascending c
  ScanSummary summary;
};

/// Solves every c in [c_from, c_to]. Rows are identical for any worker count.
/// Throws DomainError when c_from < 2 or c_from > c_to, ResourceError when
/// c_to > kScanDeskCap and allow_large is not set.
ScanResult scan(u64 c_from, u64 c_to, const ScanOptions& options = {});
ScanResult scan(const CototientSolver& solver, u64 c_from, u64 c_to, const ScanOptions& options = {});

ScanSummary summarize(const std::vector<ScanRow>& rows, unsigned slope_from_block = 8);

}  // namespace coto
