#include "coto/cototient.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "coto/errors.hpp"
#include "coto/parallel.hpp"

namespace coto {
namespace {

using u128 = unsigned __int128;

u64 isqrt(u64 x) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

u64 icbrt(u64 x) {
  u64 r = static_cast<u64>(std::cbrt(static_cast<double>(x)));
  while (r > 0 && r * r * r > x) --r;
  while ((r + 1) * (r + 1) * (r + 1) <= x) ++r;
  return r;
}

// Merges the factorizations of a^2 and b^3.
Factorization powerful_factorization(const Factorization& a, const Factorization& b, u64 n) {
  Factorization out{n, {}};
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.parts.size() || j < b.parts.size()) {
    if (j == b.parts.size() || (i < a.parts.size() && a.parts[i].prime < b.parts[j].prime)) {
      out.parts.push_back({a.parts[i].prime, 2 * a.parts[i].exponent});
      ++i;
    } else if (i == a.parts.size() || b.parts[j].prime < a.parts[i].prime) {
      out.parts.push_back({b.parts[j].prime, 3 * b.parts[j].exponent});
      ++j;
    } else {
      out.parts.push_back({a.parts[i].prime, 2 * a.parts[i].exponent + 3 * b.parts[j].exponent});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

CototientSolver::CototientSolver(u64 c_max, u64 budget) : c_max_(c_max) {
  if (c_max < 2) throw DomainError("solver: c_max must be >= 2");
  if (c_max > 0xFFFFFFFFull) throw ResourceError("solver: c_max must fit in 32 bits");
  table_ = std::make_shared<const FactorTable>(c_max + 1, budget);
  phi_ = totient_table(*table_);
  powerful_by_cototient_.resize(c_max + 1);

  // Powerful n = a^2 b^3 <= c_max^2 with b squarefree; each n arises once.
  const u64 limit = c_max * c_max;
  for (u64 b = 1, b_max = icbrt(limit); b <= b_max; ++b) {
    const Factorization fb = factorize(b, table_.get());
    if (!fb.squarefree()) continue;
    const u64 b3 = b * b * b;
    for (u64 a = 1, a_max = isqrt(limit / b3); a <= a_max; ++a) {
      const u64 n = a * a * b3;
      if (n < 4) continue;
      Factorization fn = powerful_factorization(factorize(a, table_.get()), fb, n);
      const u64 psi = cototient(fn);
      if (psi > c_max) continue;
      powerful_by_cototient_[psi].push_back({psi, n, std::move(fn)});
    }
  }
}

std::vector<SolutionRecord> CototientSolver::solve_records(u64 c) const {
  if (c < 2) throw DomainError("solve: c must be >= 2 (c = 1 is solved by every prime)");
  if (c > c_max_) {
    throw PreconditionError("solve: c = " + std::to_string(c) + " exceeds solver range " + std::to_string(c_max_));
  }
  std::vector<SolutionRecord> out;

  // n = A p with p prime, p not dividing A: c = (A - phi(A)) p + phi(A).
  const auto c32 = static_cast<std::uint32_t>(c);
  for (std::uint32_t A = 2; A < c32; ++A) {
    const std::uint32_t phi_a = phi_[A];
    if (c32 <= phi_a) continue;
    const std::uint32_t rest = c32 - phi_a;
    const std::uint32_t psi_a = A - phi_a;
    if (rest % psi_a != 0) continue;
    const std::uint32_t p = rest / psi_a;
    if (p < 2 || !table_->is_prime(p) || A % p == 0) continue;
    Factorization f = factorize(A, table_.get());
    auto pos = std::lower_bound(f.parts.begin(), f.parts.end(), u64{p},
                                [](const PrimePower& pp, u64 x) { return pp.prime < x; });
    f.parts.insert(pos, PrimePower{p, 1});
    f.n = u64{A} * p;
    out.push_back({c, f.n, std::move(f)});
  }

  for (const auto& rec : powerful_by_cototient_[c]) out.push_back(rec);

  std::sort(out.begin(), out.end(), [](const SolutionRecord& x, const SolutionRecord& y) { return x.n < y.n; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const SolutionRecord& x, const SolutionRecord& y) { return x.n == y.n; }),
            out.end());
  return out;
}

std::vector<u64> CototientSolver::solve(u64 c) const {
  std::vector<u64> out;
  for (const auto& rec : solve_records(c)) out.push_back(rec.n);
  return out;
}

u64 CototientSolver::goldbach_count(u64 k) const {
  if (k < 2) throw DomainError("goldbach_count: k must be >= 2");
  if (k > table_->limit()) {
    throw PreconditionError("goldbach_count: k = " + std::to_string(k) + " exceeds solver range");
  }
  if (k % 2 == 1) return k > 2 && table_->is_prime(k - 2) ? 1 : 0;
  u64 count = 0;
  for (std::uint32_t p : table_->primes()) {
    if (2 * u64{p} > k) break;
    if (table_->is_prime(k - p)) ++count;
  }
  return count;
}

std::vector<u64> solve(u64 c) {
  if (c < 2) throw DomainError("solve: c must be >= 2 (c = 1 is solved by every prime)");
  return CototientSolver(c).solve(c);
}

std::map<u64, std::vector<u64>> oracle_solutions(u64 c_max) {
  if (c_max < 2 || c_max > kOracleCap) {
    throw ResourceError("oracle_solutions: c_max must lie in [2, " + std::to_string(kOracleCap) + "]");
  }
  const u64 limit = c_max * c_max;
  // Plain totient sieve: phi[j] -= phi[j] / p for every prime p dividing j.
  std::vector<std::uint32_t> phi(limit + 1);
  for (u64 i = 0; i <= limit; ++i) phi[i] = static_cast<std::uint32_t>(i);
  for (u64 p = 2; p <= limit; ++p) {
    if (phi[p] != p) continue;
    for (u64 j = p; j <= limit; j += p) phi[j] -= phi[j] / static_cast<std::uint32_t>(p);
  }
  std::map<u64, std::vector<u64>> out;
  for (u64 c = 2; c <= c_max; ++c) out[c];
  for (u64 n = 2; n <= limit; ++n) {
    const u64 psi = n - phi[n];
    if (psi >= 2 && psi <= c_max) out[psi].push_back(n);
  }
  return out;
}

std::vector<u64> solve_primal(u64 c) {
  if (c < 2) throw DomainError("solve_primal: c must be >= 2");
  // psi(p^a) = p^(a-1), so c must itself be a power of p.
  const Factorization f = factorize(c);
  if (f.parts.size() != 1) return {};
  return {checked_mul(f.parts[0].prime, c)};
}

u64 goldbach_count(u64 k, const FactorTable* table) {
  if (k < 2) throw DomainError("goldbach_count: k must be >= 2");
  std::unique_ptr<FactorTable> local;
  if (table == nullptr || !table->covers(k)) {
    local = std::make_unique<FactorTable>(k);
    table = local.get();
  }
  if (k % 2 == 1) return k > 2 && table->is_prime(k - 2) ? 1 : 0;
  u64 count = 0;
  for (std::uint32_t p : table->primes()) {
    if (2 * u64{p} > k) break;
    if (table->is_prime(k - p)) ++count;
  }
  return count;
}

std::vector<u64> solve_given_B(u64 B, u64 c, const FactorTable* table) {
  if (B < 2) throw DomainError("solve_given_B: B must be >= 2 (B = 1 is the Goldbach case)");
  if (c < 2) throw DomainError("solve_given_B: c must be >= 2");
  const u64 phi_b = euler_phi(B, table);
  const u64 psi_b = B - phi_b;
  const u64 M = checked_add(checked_mul(psi_b, c), checked_mul(B, phi_b));

  std::vector<u64> out;
  for (u64 u : divisors(M, table)) {
    const u64 v = M / u;
    if (u >= v) break;
    if (u <= phi_b || (u - phi_b) % psi_b != 0 || (v - phi_b) % psi_b != 0) continue;
    const u64 p = (u - phi_b) / psi_b;
    const u64 q = (v - phi_b) / psi_b;
    if (B % p == 0 || B % q == 0 || !is_prime(p, table) || !is_prime(q, table)) continue;
    const u64 n = checked_mul(checked_mul(B, p), q);
    if (cototient(n, table) == c) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

BpqIdentity bpq_identity(u64 B, u64 p, u64 q, u64 c) {
  const u64 phi_b = euler_phi(B);
  const u128 d = B - phi_b;
  return {(d * p + phi_b) * (d * q + phi_b), d * c + static_cast<u128>(B) * phi_b};
}

u64 Classification::total() const {
  u64 t = 0;
  for (const auto& [k, count] : histogram) t += count;
  return t;
}

Classification classify(const std::vector<SolutionRecord>& solutions) {
  Classification out;
  for (const auto& rec : solutions) {
    ++out.histogram[rec.primal_count()];
    if (rec.squarefree()) ++out.squarefree[rec.primal_count()];
  }
  return out;
}

ScanResult scan(const CototientSolver& solver, u64 c_from, u64 c_to, const ScanOptions& options) {
  if (c_from < 2) throw DomainError("scan: c_from must be >= 2");
  if (c_from > c_to) throw DomainError("scan: c_from must not exceed c_to");
  if (c_to > kScanDeskCap && !options.allow_large) {
    throw ResourceError("scan: c_to = " + std::to_string(c_to) + " exceeds the desk cap " +
                        std::to_string(kScanDeskCap) + " (override required)");
  }
  ScanResult result;
  result.rows.resize(c_to - c_from + 1);
  parallel_for(result.rows.size(), options.workers, 64, [&](std::size_t i) {
    const u64 c = c_from + i;
    const auto records = solver.solve_records(c);
    ScanRow& row = result.rows[i];
    row.c = c;
    row.T = records.size();
    row.G = solver.goldbach_count(c + 1);
    row.residual = static_cast<std::int64_t>(row.T) - static_cast<std::int64_t>(row.G);
    row.histogram = classify(records).histogram;
    row.max_n = records.empty() ? 0 : records.back().n;
    if (options.keep_solutions) {
      for (const auto& rec : records) row.solutions.push_back(rec.n);
    }
  });
  result.summary = summarize(result.rows, options.slope_from_block);
  return result;
}

ScanResult scan(u64 c_from, u64 c_to, const ScanOptions& options) {
  if (c_from < 2) throw DomainError("scan: c_from must be >= 2");
  if (c_from > c_to) throw DomainError("scan: c_from must not exceed c_to");
  if (c_to > kScanDeskCap && !options.allow_large) {
    throw ResourceError("scan: c_to = " + std::to_string(c_to) + " exceeds the desk cap " +
                        std::to_string(kScanDeskCap) + " (override required)");
  }
  const CototientSolver solver(c_to);
  return scan(solver, c_from, c_to, options);
}

ScanSummary summarize(const std::vector<ScanRow>& rows, unsigned slope_from_block) {
  ScanSummary s;
  s.slope_from_block = slope_from_block;
  if (rows.empty()) return s;
  s.c_from = rows.front().c;
  s.c_to = rows.back().c;
  s.min_residual = rows.front().residual;
  for (const auto& row : rows) {
    s.min_residual = std::min(s.min_residual, row.residual);
    s.total_solutions += row.T;
    const auto j = static_cast<unsigned>(std::bit_width(row.c) - 1);
    if (s.blocks.empty() || s.blocks.back().j != j) {
      s.blocks.push_back({j, row.c, row.c, row.residual, row.c});
      continue;
    }
    DyadicBlock& block = s.blocks.back();
    block.hi = row.c;
    if (row.residual > block.max_residual) {
      block.max_residual = row.residual;
      block.argmax_c = row.c;
    }
  }

  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& block : s.blocks) {
    if (block.j < slope_from_block) continue;
    xs.push_back(std::log(block.midpoint()));
    ys.push_back(std::log(static_cast<double>(std::max<std::int64_t>(block.max_residual, 0)) + 1.0));
  }
  if (xs.size() >= 2) {
    const double k = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sx += xs[i];
      sy += ys[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    const double denom = k * sxx - sx * sx;
    if (denom != 0) s.slope = (k * sxy - sx * sy) / denom;
  }
  return s;
}

}  // namespace coto
