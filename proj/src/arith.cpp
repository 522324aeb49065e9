#include "coto/arith.hpp"

#include <algorithm>
#include <sstream>

#include "coto/errors.hpp"

namespace coto {

u64 PrimePower::value() const { return checked_pow(prime, exponent); }

bool Factorization::squarefree() const {
  return std::all_of(parts.begin(), parts.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

u64 Factorization::product() const {
  u64 r = 1;
  for (const auto& pp : parts) r = checked_mul(r, pp.value());
  return r;
}

bool Factorization::valid() const {
  if (n == 0) return false;
  if ((n == 1) != parts.empty()) return false;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].exponent == 0 || !is_prime(parts[i].prime)) return false;
    if (i > 0 && parts[i - 1].prime >= parts[i].prime) return false;
  }
  try {
    return product() == n;
  } catch (const ArithmeticError&) {
    return false;
  }
}

FactorTable::FactorTable(u64 limit, u64 budget) : limit_(limit) {
  if (limit < 2) throw DomainError("factor table limit must be >= 2");
  if (limit > budget) {
    throw ResourceError("factor table limit " + std::to_string(limit) + " exceeds budget " +
                        std::to_string(budget));
  }
  spf_.assign(limit + 1, 0);
  // Linear sieve: each composite is struck exactly once by its smallest prime.
  for (u64 i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes_.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes_) {
      if (p > spf_[i] || u64{p} * i > limit) break;
      spf_[u64{p} * i] = p;
    }
  }
}

u64 FactorTable::smallest_factor(u64 n) const {
  if (n < 2 || n > limit_) throw DomainError("smallest_factor: " + std::to_string(n) + " outside table");
  return spf_[n];
}

bool FactorTable::is_prime(u64 n) const {
  if (n > limit_) throw DomainError("is_prime: " + std::to_string(n) + " outside table");
  return n >= 2 && spf_[n] == n;
}

FactorTable build_factor_table(u64 limit, u64 budget) { return FactorTable(limit, budget); }

namespace {

Factorization factorize_table(u64 n, const FactorTable& table) {
  Factorization f{n, {}};
  while (n > 1) {
    u64 p = table.smallest_factor(n);
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.parts.push_back({p, e});
  }
  return f;
}

Factorization factorize_trial(u64 n) {
  Factorization f{n, {}};
  auto take = [&](u64 p) {
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) f.parts.push_back({p, e});
  };
  take(2);
  take(3);
  // 6k +- 1 wheel
  for (u64 p = 5; p <= n / p; p += 6) {
    take(p);
    take(p + 2);
  }
  if (n > 1) f.parts.push_back({n, 1});
  return f;
}

}  // namespace

Factorization factorize(u64 n, const FactorTable* table) {
  if (n == 0) throw DomainError("factorize: n must be >= 1");
  if (table != nullptr && table->covers(n)) return factorize_table(n, *table);
  return factorize_trial(n);
}

bool is_prime(u64 n, const FactorTable* table) {
  if (table != nullptr && table->covers(n)) return table->is_prime(n);
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (u64 p = 5; p <= n / p; p += 6) {
    if (n % p == 0 || n % (p + 2) == 0) return false;
  }
  return true;
}

u64 euler_phi(const Factorization& f) {
  u64 r = 1;
  for (const auto& pp : f.parts) r = checked_mul(r, checked_mul(checked_pow(pp.prime, pp.exponent - 1), pp.prime - 1));
  return r;
}

u64 euler_phi(u64 n, const FactorTable* table) { return euler_phi(factorize(n, table)); }

u64 cototient(const Factorization& f) { return f.n - euler_phi(f); }

u64 cototient(u64 n, const FactorTable* table) { return cototient(factorize(n, table)); }

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> out{1};
  for (const auto& pp : f.parts) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (std::uint32_t e = 1; e <= pp.exponent; ++e) {
      pk *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> divisors(u64 n, const FactorTable* table) { return divisors(factorize(n, table)); }

u64 divisor_count(u64 n, const FactorTable* table) {
  u64 r = 1;
  for (const auto& pp : factorize(n, table).parts) r *= pp.exponent + 1;
  return r;
}

std::vector<std::uint32_t> totient_table(const FactorTable& table) {
  const u64 limit = table.limit();
  std::vector<std::uint32_t> phi(limit + 1, 0);
  phi[1] = 1;
  for (u64 k = 2; k <= limit; ++k) {
    const u64 p = table.smallest_factor(k);
    const u64 m = k / p;
    phi[k] = static_cast<std::uint32_t>(m % p == 0 ? u64{phi[m]} * p : u64{phi[m]} * (p - 1));
  }
  return phi;
}

MultiplicativeFunctionSpec identity_function() {
  return {"id", [](u64 p, std::uint32_t a) { return checked_pow(p, a); }};
}

MultiplicativeFunctionSpec totient_function() {
  return {"phi", [](u64 p, std::uint32_t a) { return checked_mul(checked_pow(p, a - 1), p - 1); }};
}

MultiplicativeFunctionSpec sigma_function() {
  return {"sigma", [](u64 p, std::uint32_t a) {
            u64 sum = 1;
            u64 pk = 1;
            for (std::uint32_t i = 1; i <= a; ++i) {
              pk = checked_mul(pk, p);
              sum = checked_add(sum, pk);
            }
            return sum;
          }};
}

MultiplicativeFunctionSpec tau_function() {
  return {"tau", [](u64, std::uint32_t a) { return u64{a} + 1; }};
}

MultiplicativeFunctionSpec builtin_function(const std::string& name) {
  if (name == "id") return identity_function();
  if (name == "phi") return totient_function();
  if (name == "sigma") return sigma_function();
  if (name == "tau") return tau_function();
  throw PreconditionError("unknown multiplicative function '" + name + "' (expected id, phi, sigma or tau)");
}

u64 eval_mult(const MultiplicativeFunctionSpec& spec, const Factorization& f) {
  u64 r = 1;
  for (const auto& pp : f.parts) r = checked_mul(r, spec.prime_power_rule(pp.prime, pp.exponent));
  return r;
}

u64 eval_mult(const MultiplicativeFunctionSpec& spec, u64 n, const FactorTable* table) {
  return eval_mult(spec, factorize(n, table));
}

std::vector<u64> primal_values(const MultiplicativeFunctionSpec& spec, const Factorization& f) {
  std::vector<u64> out;
  out.reserve(f.parts.size());
  for (const auto& pp : f.parts) out.push_back(spec.prime_power_rule(pp.prime, pp.exponent));
  return out;
}

std::string to_string(const Factorization& f) {
  if (f.parts.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < f.parts.size(); ++i) {
    if (i > 0) os << '*';
    os << f.parts[i].prime;
    if (f.parts[i].exponent > 1) os << '^' << f.parts[i].exponent;
  }
  return os.str();
}

}  // namespace coto
