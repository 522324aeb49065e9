#include "coto/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "coto/arith.hpp"
#include "coto/cototient.hpp"
#include "coto/diffscan.hpp"
#include "coto/generators.hpp"
#include "coto/geometry.hpp"
#include "coto/io.hpp"
#include "coto/partition.hpp"

namespace coto::acceptance {
namespace {

using Clock = std::chrono::steady_clock;

// Each criterion draws from its own stream so results do not depend on
// which criteria ran before it.
std::mt19937_64 stream(const Options& options, int id) {
  std::seed_seq seq{options.seed, static_cast<std::uint64_t>(id)};
  return std::mt19937_64(seq);
}

template <class F>
CriterionResult timed(int id, const char* name, F&& body) {
  const auto start = Clock::now();
  CriterionResult r;
  r.id = id;
  r.name = name;
  try {
    std::ostringstream detail;
    r.pass = body(detail);
    r.detail = detail.str();
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

}  // namespace

CriterionResult oracle_equivalence(const Options&) {
  return timed(1, "oracle equivalence, c in [2, 2000]", [](std::ostream& detail) {
    constexpr u64 kMax = 2000;
    const auto oracle = oracle_solutions(kMax);
    const CototientSolver solver(kMax);
    u64 mismatches = 0;
    u64 first_bad = 0;
    u64 total = 0;
    for (u64 c = 2; c <= kMax; ++c) {
      const auto got = solver.solve(c);
      total += got.size();
      if (got != oracle.at(c)) {
        if (mismatches++ == 0) first_bad = c;
      }
    }
    detail << kMax - 1 << " values of c, " << total << " solutions, " << mismatches << " mismatches";
    if (mismatches > 0) detail << " (first at c = " << first_bad << ")";
    return mismatches == 0;
  });
}

CriterionResult prime_forests(const Options& options) {
  return timed(2, "forests from random prime configurations", [&](std::ostream& detail) {
    constexpr int kConfigs = 10000;
    auto rng = stream(options, 2);
    int not_prime = 0;
    int cycles = 0;
    int over = 0;
    u64 edges = 0;
    u64 max_edges = 0;
    u64 vertices = 0;
    for (int i = 0; i < kConfigs; ++i) {
      const Configuration config = random_prime_configuration(rng);
      if (!is_prime_configuration(config)) ++not_prime;
      const IncidenceGraph g = incidence_graph(config);
      if (find_cycle(g)) ++cycles;
      if (g.edges.size() > g.m + g.n) ++over;
      edges += g.edges.size();
      vertices += g.m + g.n;
      max_edges = std::max<u64>(max_edges, g.edges.size());
    }
    detail << kConfigs << " configurations, " << edges << " incidences over " << vertices << " vertices (max "
           << max_edges << " per graph); non-prime " << not_prime << ", cyclic " << cycles << ", |E| > m+n " << over;
    return not_prime == 0 && cycles == 0 && over == 0;
  });
}

CriterionResult decomposition_bound(const Options& options) {
  return timed(3, "divisor-class decomposition bound", [&](std::ostream& detail) {
    constexpr int kSamples = 100;
    auto rng = stream(options, 3);
    const CototientSolver solver(5000);
    int failures = 0;
    u64 classes_total = 0;
    u64 edges_total = 0;
    u64 nonempty = 0;
    std::string first_failure;
    for (int i = 0; i < kSamples; ++i) {
      const u64 c = std::uniform_int_distribution<u64>(10, 5000)(rng);
      DifferenceInstance inst{identity_function(), totient_function(), c, solver.solve(c), 0};
      const ConstructedConfiguration built = solutions_to_configuration(inst);
      const IncidenceGraph graph = incidence_graph(built.config);
      const auto classes = decompose(built.config, graph);
      const u64 tau = divisor_count(c);
      bool ok = built.all_incident() && built.bounds_hold() && classes.size() <= tau * tau * tau;
      u64 covered = 0;
      for (const auto& cls : classes) {
        covered += cls.class_edges.size();
        if (!is_prime_configuration(cls.reduced_configuration())) ok = false;
      }
      ok = ok && covered == graph.edges.size();
      const IncidenceBoundReport report = verify_incidence_bound(built.config);
      ok = ok && report.pass && report.edge_count <= (report.m + report.n) * tau * tau * tau;
      if (!ok && failures++ == 0) first_failure = " (first failure at c = " + std::to_string(c) + ")";
      classes_total += classes.size();
      edges_total += graph.edges.size();
      if (!inst.solutions.empty()) ++nonempty;
    }
    detail << kSamples << " values of c (" << nonempty << " with solutions), " << edges_total << " incidences in "
           << classes_total << " classes; failures " << failures << first_failure;
    return failures == 0;
  });
}

CriterionResult split_bound(const Options& options) {
  return timed(4, "balanced split bound on random multisets", [&](std::ostream& detail) {
    constexpr int kSamples = 100000;
    auto rng = stream(options, 4);
    int violations = 0;
    double worst = 0;
    for (int i = 0; i < kSamples; ++i) {
      const FactorMultiset ms = random_factor_multiset(rng);
      const SplitResult split = balanced_split(ms.values, ms.t);
      if (!within_split_bound(split, ms.t)) ++violations;
      const double n = static_cast<double>(split.product_a) * static_cast<double>(split.product_b);
      worst = std::max(worst, static_cast<double>(split.larger()) / std::sqrt(n * static_cast<double>(ms.t)));
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", worst);
    detail << kSamples << " multisets, violations " << violations << ", worst max/sqrt(n t) = " << buf;
    return violations == 0;
  });
}

CriterionResult count_structure(const Options& options) {
  return timed(5, "cototient count structure, c in [2, 10^5]", [&](std::ostream& detail) {
    constexpr u64 kScanTo = 100000;
    constexpr u64 kBijectionTo = 2000;
    constexpr double kSlopeCap = 0.9;
    const CototientSolver solver(kScanTo);
    ScanOptions so;
    so.workers = options.workers;
    so.slope_from_block = 8;
    const ScanResult result = scan(solver, 2, kScanTo, so);

    u64 below = 0;
    u64 first_below = 0;
    for (const auto& row : result.rows) {
      if (row.T + 1 < row.G) {
        if (below++ == 0) first_below = row.c;
      }
    }

    u64 bijection_failures = 0;
    for (u64 c = 2; c <= kBijectionTo; ++c) {
      std::set<u64> from_solutions;
      for (const auto& rec : solver.solve_records(c)) {
        if (rec.primal_count() == 2 && rec.squarefree()) from_solutions.insert(rec.n);
      }
      std::set<u64> from_pairs;
      for (u64 p = 2; 2 * p < c + 1; ++p) {
        if (solver.table().is_prime(p) && solver.table().is_prime(c + 1 - p)) from_pairs.insert(p * (c + 1 - p));
      }
      if (from_solutions != from_pairs) ++bijection_failures;
    }

    const auto& s = result.summary;
    const bool slope_ok = s.slope.has_value() && *s.slope <= kSlopeCap;
    char slope[32];
    std::snprintf(slope, sizeof slope, "%.4f", s.slope.value_or(-1.0));
    detail << result.rows.size() << " rows, " << s.total_solutions << " solutions; T < G - 1 at " << below
           << " values";
    if (below > 0) detail << " (first c = " << first_below << ")";
    detail << "; two-prime bijection failures for c <= " << kBijectionTo << ": " << bijection_failures
           << "; residual slope over blocks 8..16 = " << slope << " (cap " << kSlopeCap << ")";
    return below == 0 && bijection_failures == 0 && slope_ok;
  });
}

CriterionResult solution_identities(const Options&) {
  return timed(6, "solution structure identities, c <= 10^4", [](std::ostream& detail) {
    constexpr u64 kMax = 10000;
    const CototientSolver solver(kMax);
    u64 solutions = 0;
    u64 a_bound = 0, window = 0, primal = 0, bpq = 0, bpq_checked = 0, given_b = 0;
    for (u64 c = 2; c <= kMax; ++c) {
      const auto records = solver.solve_records(c);
      solutions += records.size();
      std::vector<u64> prime_powers;
      for (const auto& rec : records) {
        const auto& parts = rec.factorization.parts;
        for (const auto& pp : parts) {
          if (pp.exponent == 1 && rec.n / pp.prime >= c) ++a_bound;
        }
        if (c % 2 == 0 && !(c < rec.n && rec.n <= 2 * c)) ++window;
        if (parts.size() == 1) prime_powers.push_back(rec.n);
        if (parts.size() < 3) continue;

        std::vector<u64> simple;
        for (const auto& pp : parts) {
          if (pp.exponent == 1) simple.push_back(pp.prime);
        }
        for (std::size_t i = 0; i < simple.size(); ++i) {
          for (std::size_t j = i + 1; j < simple.size(); ++j) {
            ++bpq_checked;
            if (!bpq_identity(rec.n / (simple[i] * simple[j]), simple[i], simple[j], c).holds()) ++bpq;
          }
        }
        // The divisor-pair solver recovers n from its two largest simple primes.
        if (simple.size() >= 2) {
          const u64 p = simple[simple.size() - 2];
          const u64 q = simple.back();
          const auto found = solve_given_B(rec.n / (p * q), c, &solver.table());
          if (!std::binary_search(found.begin(), found.end(), rec.n)) ++given_b;
        }
      }
      if (solve_primal(c) != prime_powers) ++primal;
    }
    detail << solutions << " solutions; A-bound violations " << a_bound << ", even-c window violations " << window
           << ", primal mismatches " << primal << ", Bpq identity failures " << bpq << " of " << bpq_checked
           << ", divisor-pair recoveries missed " << given_b;
    return a_bound == 0 && window == 0 && primal == 0 && bpq == 0 && given_b == 0;
  });
}

CriterionResult determinism(const Options&) {
  return timed(7, "scan determinism, 1 vs 8 workers", [](std::ostream& detail) {
    constexpr u64 kScanTo = 10000;
    const CototientSolver solver(kScanTo);
    auto render = [&](unsigned workers) {
      ScanOptions so;
      so.workers = workers;
      so.keep_solutions = true;
      const ScanResult r = scan(solver, 2, kScanTo, so);
      std::ostringstream os;
      write_scan_table(os, r.rows);
      write_scan_summary(os, r.summary);
      write_solution_pairs(os, r.rows);
      return os.str();
    };
    const std::string one = render(1);
    const std::string eight = render(8);
    detail << "outputs " << one.size() << " and " << eight.size() << " bytes, "
           << (one == eight ? "identical" : "DIFFERENT");
    return one == eight;
  });
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "oracle equivalence", oracle_equivalence},   {2, "prime forests", prime_forests},
      {3, "decomposition bound", decomposition_bound}, {4, "split bound", split_bound},
      {5, "count structure", count_structure},     {6, "solution identities", solution_identities},
      {7, "determinism", determinism},
  };
  return all;
}

std::string format_line(const CriterionResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.1f", r.seconds);
  return std::string(r.pass ? "[PASS]" : "[FAIL]") + " C" + std::to_string(r.id) + " " + r.name + ": " + r.detail +
         " (" + secs + " s)";
}

std::vector<CriterionResult> run(const Options& options, const std::vector<int>& ids, std::ostream& out) {
  std::vector<CriterionResult> results;
  for (const auto& criterion : criteria()) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), criterion.id) == ids.end()) continue;
    results.push_back(criterion.run(options));
    out << format_line(results.back()) << std::endl;
  }
  return results;
}

}  // namespace coto::acceptance
