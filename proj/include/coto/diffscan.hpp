#pragma once

// f(n) - g(n) = c for multiplicative f, g: solution search, hypothesis
// checks and the solutions-to-configuration construction.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coto/arith.hpp"
#include "coto/geometry.hpp"

namespace coto {

struct DifferenceInstance {
  MultiplicativeFunctionSpec f;
  MultiplicativeFunctionSpec g;
  u64 c = 0;
  std::vector<u64> solutions;
  u64 t = 0;  // 0 selects the largest primal value over the solutions
};

/// Which function the smoothness bound applies to: f (standard) or g (the
/// variant for pairs such as f = tau, g = id).
enum class SmoothSide { f, g };

/// Every n in [2, n_max] with f(n) - g(n) = c, ascending. Overflow throws
/// ArithmeticError naming n; n_max beyond the table budget throws ResourceError.
std::vector<u64> scan_difference(const MultiplicativeFunctionSpec& f, const MultiplicativeFunctionSpec& g, u64 c,
                                 u64 n_max, unsigned workers = 1);

struct Verdict {
  bool holds = true;
  std::optional<u64> witness;  // counterexample n when the condition fails
  std::string detail;
};

/// Finite census of |{n <= n_max : h(n) <= x}| / x over x = 1, 2, 4, ..., n_max.
struct Census {
  double max_ratio = 0;
  u64 at_x = 0;
};

struct ConditionReport {
  u64 n_max = 0;
  u64 t = 0;
  Verdict f_exceeds_g;     // (i)   f(n) > g(n) for 1 < n <= n_max
  Verdict pair_injective;  // (ii)  (f(n), g(n)) distinct over 1 <= n <= n_max
  Verdict equation;        // (iii) every reported solution satisfies f - g = c
  Census f_census;         // (iv)
  Verdict f_smooth;        // (v)   primal f-values <= t on every solution
  Census g_census;         // (iii') variant
  Verdict g_smooth;        // (v')  variant
  std::vector<u64> solutions;
};

/// t = 0 selects the largest primal f-value over the solutions found.
ConditionReport check_conditions(const MultiplicativeFunctionSpec& f, const MultiplicativeFunctionSpec& g, u64 c,
                                 u64 n_max, u64 t = 0, unsigned workers = 1);

/// Solutions whose every primal value h(p^a) is <= t.
std::vector<u64> smoothness_filter(const std::vector<u64>& solutions, const MultiplicativeFunctionSpec& h, u64 t);

/// Largest primal h-value over the solutions (1 when there are none).
u64 max_primal_value(const std::vector<u64>& solutions, const MultiplicativeFunctionSpec& h);

/// How one solution n = a b was placed: point (f(a), g(a)), line (f(b), g(b)).
struct Embedding {
  u64 n = 0;
  u64 a = 1;
  u64 b = 1;
  std::size_t point = 0;
  std::size_t line = 0;
  u64 f_n = 0;
  u64 f_a = 0;
  u64 f_b = 0;
  bool split_bound = true;  // h(a), h(b) <= sqrt(h(n) t) for the smoothness side h
  bool chain_bound = true;  // f(a), f(b) <= t sqrt(c) and f(n) <= c t (standard side only)
};

struct ConstructedConfiguration {
  Configuration config;
  u64 t = 0;
  SmoothSide side = SmoothSide::f;
  std::vector<Embedding> embeddings;       // one per solution, in input order
  std::vector<u64> point_multiplicity;     // solutions mapped to each point
  std::vector<u64> line_multiplicity;

  bool all_incident() const;
  bool bounds_hold() const;
};

/// Splits each solution's primal values with balanced_split and emits the
/// resulting incident point-line pair, deduplicating repeated points and
/// lines. Throws PreconditionError listing the solutions whose primal values
/// exceed t.
ConstructedConfiguration solutions_to_configuration(const DifferenceInstance& instance,
                                                    SmoothSide side = SmoothSide::f);

}  // namespace coto
