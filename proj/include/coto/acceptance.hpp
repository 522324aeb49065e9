#pragma once

// The acceptance checks, shared by the `coto verify` subcommand and the
// acceptance test binary.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace coto::acceptance {

inline constexpr std::uint64_t kDefaultSeed = 20201015;

struct Options {
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 8;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// 1. solve(c) equals the brute-force oracle for every c in [2, 2000].
CriterionResult oracle_equivalence(const Options& options);
/// 2. 10^4 seeded prime configurations are forests with |E| <= m + n.
CriterionResult prime_forests(const Options& options);
/// 3. Divisor-class decomposition of cototient solution configurations.
CriterionResult decomposition_bound(const Options& options);
/// 4. 10^5 seeded factor multisets split within sqrt(n t).
CriterionResult split_bound(const Options& options);
/// 5. Scan of c in [2, 10^5]: Goldbach lower bound, two-prime bijection, residual slope.
CriterionResult count_structure(const Options& options);
/// 6. A-bound, even-c window, primal closed form and Bpq identity for c <= 10^4.
CriterionResult solution_identities(const Options& options);
/// 7. Scan output for c in [2, 10^4] is byte-identical with 1 and 8 workers.
CriterionResult determinism(const Options& options);

struct Criterion {
  int id;
  const char* name;
  std::function<CriterionResult(const Options&)> run;
};

const std::vector<Criterion>& criteria();

/// Runs the selected criteria (all when `ids` is empty), printing one line
/// per criterion to `out`. Returns the results in id order.
std::vector<CriterionResult> run(const Options& options, const std::vector<int>& ids, std::ostream& out);

std::string format_line(const CriterionResult& r);

}  // namespace coto::acceptance
