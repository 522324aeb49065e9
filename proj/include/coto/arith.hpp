#pragma once

// Exact 64-bit integer arithmetic: primality, factorization, divisors,
// Euler's totient, the cototient and multiplicative function evaluation.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace coto {

using u64 = std::uint64_t;

struct PrimePower {
  u64 prime = 0;
  std::uint32_t exponent = 0;

  u64 value() const;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of n, primes strictly increasing. n = 1 has no parts.
struct Factorization {
  u64 n = 1;
  std::vector<PrimePower> parts;

  bool squarefree() const;
  /// Number of primal (prime power) components, i.e. distinct primes.
  std::size_t primal_count() const { return parts.size(); }
  /// Recomputes the product of the parts; throws ArithmeticError on overflow.
  u64 product() const;
  /// Checks the ordering, exponent and product invariants.
  bool valid() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

inline constexpr u64 kDefaultTableBudget = u64{1} << 31;

/// Smallest-prime-factor table for 2..limit, immutable after construction.
class FactorTable {
 public:
  /// Throws ResourceError when limit exceeds budget, DomainError when limit < 2.
  explicit FactorTable(u64 limit, u64 budget = kDefaultTableBudget);

  u64 limit() const { return limit_; }
  bool covers(u64 n) const { return n <= limit_; }
  u64 smallest_factor(u64 n) const;
  bool is_prime(u64 n) const;
  const std::vector<std::uint32_t>& primes() const { return primes_; }

 private:
  u64 limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

FactorTable build_factor_table(u64 limit, u64 budget = kDefaultTableBudget);

/// Uses the table when it covers n, otherwise trial division. Throws DomainError for n = 0.
Factorization factorize(u64 n, const FactorTable* table = nullptr);

bool is_prime(u64 n, const FactorTable* table = nullptr);

u64 euler_phi(u64 n, const FactorTable* table = nullptr);
u64 euler_phi(const Factorization& f);

/// n - phi(n).
u64 cototient(u64 n, const FactorTable* table = nullptr);
u64 cototient(const Factorization& f);

std::vector<u64> divisors(u64 n, const FactorTable* table = nullptr);
std::vector<u64> divisors(const Factorization& f);

/// tau(n), the number of divisors.
u64 divisor_count(u64 n, const FactorTable* table = nullptr);

/// phi(k) for every 0 <= k <= table.limit() (phi(0) stored as 0).
std::vector<std::uint32_t> totient_table(const FactorTable& table);

/// A multiplicative function given by its value on prime powers.
struct MultiplicativeFunctionSpec {
  std::string name;
  std::function<u64(u64 prime, std::uint32_t exponent)> prime_power_rule;
};

MultiplicativeFunctionSpec identity_function();
MultiplicativeFunctionSpec totient_function();
MultiplicativeFunctionSpec sigma_function();
MultiplicativeFunctionSpec tau_function();

/// Looks up one of the built-in identifiers: id, phi, sigma, tau.
/// Throws PreconditionError for anything else.
MultiplicativeFunctionSpec builtin_function(const std::string& name);

/// Product of the rule over n's primal parts. Overflow throws ArithmeticError.
u64 eval_mult(const MultiplicativeFunctionSpec& spec, u64 n, const FactorTable* table = nullptr);
u64 eval_mult(const MultiplicativeFunctionSpec& spec, const Factorization& f);

/// Rule values f(p^a) for each part, in part order.
std::vector<u64> primal_values(const MultiplicativeFunctionSpec& spec, const Factorization& f);

std::string to_string(const Factorization& f);

}  // namespace coto
