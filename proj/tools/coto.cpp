// coto: command-line front end for the cototient and configuration tools.
//
// Exit status: 0 success, 1 a verification or assertion failed, 2 usage or
// validation error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coto/acceptance.hpp"
#include "coto/arith.hpp"
#include "coto/cototient.hpp"
#include "coto/diffscan.hpp"
#include "coto/errors.hpp"
#include "coto/generators.hpp"
#include "coto/geometry.hpp"
#include "coto/io.hpp"
#include "coto/partition.hpp"
#include "coto/rules.hpp"
#include "json.hpp"

namespace {

using coto::u64;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFailed = 1;

std::string join(const std::vector<u64>& xs, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string join_indices(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// Writes to the file when a path is given, otherwise to stdout.
template <class F>
void emit(const std::string& path, F&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw coto::PreconditionError("cannot write " + path);
  write(out);
}

struct SolveArgs {
  u64 c = 0;
  u64 B = 0;
  bool primal = false;
  std::string format = "text";
};

int run_solve(const SolveArgs& a) {
  std::vector<u64> sols;
  if (a.B != 0) {
    sols = coto::solve_given_B(a.B, a.c);
  } else if (a.primal) {
    sols = coto::solve_primal(a.c);
  } else {
    sols = coto::solve(a.c);
  }
  if (a.format == "json") {
    json doc = {{"c", a.c}, {"solutions", sols}};
    if (a.B != 0) doc["B"] = a.B;
    std::cout << doc.dump() << '\n';
  } else {
    std::cout << join(sols) << '\n';
  }
  return kOk;
}

int run_classify(u64 c, const std::string& format) {
  const coto::CototientSolver solver(c);
  const auto records = solver.solve_records(c);
  const auto cls = coto::classify(records);
  if (format == "json") {
    json hist = json::object();
    for (const auto& [k, v] : cls.histogram) hist[std::to_string(k)] = v;
    json sq = json::object();
    for (const auto& [k, v] : cls.squarefree) sq[std::to_string(k)] = v;
    json sols = json::array();
    for (const auto& r : records) {
      sols.push_back({{"n", r.n}, {"factorization", coto::to_string(r.factorization)},
                      {"primal_count", r.primal_count()}, {"squarefree", r.squarefree()}});
    }
    std::cout << json{{"c", c}, {"histogram", hist}, {"squarefree", sq}, {"solutions", sols}}.dump(2) << '\n';
    return kOk;
  }
  std::cout << "n,factorization,primal_count,squarefree\n";
  for (const auto& r : records) {
    std::cout << r.n << ',' << coto::to_string(r.factorization) << ',' << r.primal_count() << ','
              << (r.squarefree() ? 1 : 0) << '\n';
  }
  std::cout << "histogram," << coto::format_histogram(cls.histogram) << '\n';
  std::cout << "squarefree," << coto::format_histogram(cls.squarefree) << '\n';
  return kOk;
}

int run_partition(const std::vector<u64>& values, u64 t) {
  const coto::SplitResult split = coto::balanced_split(values, t);
  const bool ok = coto::within_split_bound(split, t);
  std::vector<u64> a_vals, b_vals;
  for (std::size_t i : split.group_a) a_vals.push_back(values[i]);
  for (std::size_t i : split.group_b) b_vals.push_back(values[i]);
  std::cout << "group_a " << join_indices(split.group_a) << " values " << join(a_vals, ",") << " product "
            << split.product_a << '\n';
  std::cout << "group_b " << join_indices(split.group_b) << " values " << join(b_vals, ",") << " product "
            << split.product_b << '\n';
  std::cout << "mode " << (split.exact ? "exact" : "greedy") << '\n';
  std::cout << "bound " << fixed(std::sqrt(static_cast<double>(split.product_a) *
                                           static_cast<double>(split.product_b) * static_cast<double>(t)))
            << " holds " << yes_no(ok) << '\n';
  return ok ? kOk : kFailed;
}

struct ScanArgs {
  u64 from = 2;
  u64 to = 2;
  unsigned workers = 1;
  std::string out;
  std::string summary;
  std::string solutions;
  std::string format = "csv";
  bool allow_large = false;
  unsigned slope_from = 8;
};

int run_scan(const ScanArgs& a) {
  coto::ScanOptions opts;
  opts.workers = a.workers;
  opts.allow_large = a.allow_large;
  opts.keep_solutions = !a.solutions.empty();
  opts.slope_from_block = a.slope_from;
  const coto::ScanResult result = coto::scan(a.from, a.to, opts);
  if (a.format == "json") {
    emit(a.out, [&](std::ostream& os) { coto::write_scan_document(os, result); });
  } else {
    emit(a.out, [&](std::ostream& os) { coto::write_scan_table(os, result.rows); });
  }
  if (!a.summary.empty()) emit(a.summary, [&](std::ostream& os) { coto::write_scan_summary(os, result.summary); });
  if (!a.solutions.empty()) emit(a.solutions, [&](std::ostream& os) { coto::write_solution_pairs(os, result.rows); });
  return kOk;
}

struct ConfigArgs {
  std::string path;
  bool assert_forest = false;
  bool assert_prime = false;
  bool assert_bound = false;
  bool show_classes = false;
};

int run_config(const ConfigArgs& a) {
  const coto::Configuration config = coto::read_configuration(a.path);
  const coto::IncidenceGraph graph = coto::incidence_graph(config);
  const bool prime = coto::is_prime_configuration(config);
  const auto cycle = coto::find_cycle(graph);
  const coto::IncidenceBoundReport report = coto::verify_incidence_bound(config);

  std::cout << "c " << config.c() << '\n';
  std::cout << "points " << graph.m << '\n';
  std::cout << "lines " << graph.n << '\n';
  std::cout << "incidences " << graph.edges.size() << '\n';
  std::cout << "st_reference " << fixed(graph.szemeredi_trotter_reference()) << '\n';
  std::cout << "prime_configuration " << yes_no(prime) << '\n';
  std::cout << "cycle " << (cycle ? coto::describe_cycle(*cycle, config) : std::string("none")) << '\n';
  std::cout << "tau_c " << report.tau_c << '\n';
  std::cout << "classes " << report.class_count << '\n';
  std::cout << "class_sizes " << join(report.per_class_sizes) << '\n';
  if (a.show_classes) {
    for (const auto& cls : coto::decompose(config, graph)) {
      std::cout << "class l=" << cls.l << " l1=" << cls.l1 << " l2=" << cls.l2 << " l3=" << cls.l3
                << " l4=" << cls.l4 << " reduced_c=" << cls.reduced_c << " edges=" << cls.class_edges.size()
                << " prime=" << yes_no(coto::is_prime_configuration(cls.reduced_configuration())) << '\n';
    }
  }
  std::cout << "bound " << report.bound << '\n';
  std::cout << "classes_prime " << yes_no(report.classes_prime) << '\n';
  std::cout << "classes_forest " << yes_no(report.classes_forest) << '\n';
  std::cout << "bound_holds " << yes_no(report.pass) << '\n';

  int status = kOk;
  if (a.assert_forest && cycle) {
    std::cerr << "assertion failed: configuration graph has a cycle\n";
    status = kFailed;
  }
  if (a.assert_prime && !prime) {
    std::cerr << "assertion failed: configuration is not prime\n";
    status = kFailed;
  }
  if (a.assert_bound && !report.pass) {
    std::cerr << "assertion failed: incidence bound check did not pass\n";
    status = kFailed;
  }
  return status;
}

struct DiffArgs {
  std::string f = "id";
  std::string g = "phi";
  u64 c = 0;
  u64 n_max = 0;
  u64 t = 0;
  bool variant = false;
  unsigned workers = 1;
  std::string config_out;
};

void print_verdict(const char* label, const coto::Verdict& v) {
  std::cout << label << ' ' << (v.holds ? "holds" : "fails");
  if (v.witness) std::cout << " witness " << *v.witness;
  std::cout << " (" << v.detail << ")\n";
}

coto::Verdict smooth_verdict(const std::vector<u64>& solutions, const coto::MultiplicativeFunctionSpec& h, u64 t) {
  const auto kept = coto::smoothness_filter(solutions, h, t);
  coto::Verdict v{kept.size() == solutions.size(), std::nullopt,
                  "primal " + h.name + "-values <= " + std::to_string(t)};
  // kept is an ordered subsequence, so the first mismatch is the first offender.
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    if (i >= kept.size() || kept[i] != solutions[i]) {
      v.witness = solutions[i];
      break;
    }
  }
  return v;
}

int run_diff(const DiffArgs& a) {
  const auto f = coto::resolve_function(a.f);
  const auto g = coto::resolve_function(a.g);
  const auto side = a.variant ? coto::SmoothSide::g : coto::SmoothSide::f;
  const coto::ConditionReport cond = coto::check_conditions(f, g, a.c, a.n_max, a.t, a.workers);
  const u64 t = a.t != 0 || !a.variant ? cond.t : coto::max_primal_value(cond.solutions, g);

  std::cout << "f " << f.name << '\n' << "g " << g.name << '\n';
  std::cout << "c " << a.c << '\n' << "n_max " << a.n_max << '\n';
  std::cout << "solutions " << join(cond.solutions) << '\n';
  std::cout << "t " << t << '\n';
  print_verdict("condition_i", cond.f_exceeds_g);
  print_verdict("condition_ii", cond.pair_injective);
  print_verdict("condition_iii", cond.equation);
  std::cout << "condition_iv census max_ratio " << fixed(cond.f_census.max_ratio) << " at_x " << cond.f_census.at_x
            << '\n';
  print_verdict("condition_v", smooth_verdict(cond.solutions, f, t));
  std::cout << "condition_iii' census max_ratio " << fixed(cond.g_census.max_ratio) << " at_x "
            << cond.g_census.at_x << '\n';
  print_verdict("condition_v'", smooth_verdict(cond.solutions, g, t));

  if (!cond.f_exceeds_g.holds && !a.variant) {
    std::cout << "construction skipped (condition i fails; rerun with --variant to bound g instead)\n";
    return kOk;
  }
  coto::DifferenceInstance inst{f, g, a.c, cond.solutions, t};
  const coto::ConstructedConfiguration built = coto::solutions_to_configuration(inst, side);
  const coto::IncidenceBoundReport report = coto::verify_incidence_bound(built.config);
  std::cout << "construction points " << built.config.points().size() << " lines " << built.config.lines().size()
            << " incident " << yes_no(built.all_incident()) << " bounds " << yes_no(built.bounds_hold()) << '\n';
  for (const auto& e : built.embeddings) {
    std::cout << "embed n " << e.n << " a " << e.a << " b " << e.b << " point (" << built.config.points()[e.point].A
              << "," << built.config.points()[e.point].a << ") line (" << built.config.lines()[e.line].B << ","
              << built.config.lines()[e.line].b << ")\n";
  }
  std::cout << "incidences " << report.edge_count << " classes " << report.class_count << " bound " << report.bound
            << " holds " << yes_no(report.pass) << '\n';
  if (!a.config_out.empty()) coto::write_configuration(a.config_out, built.config);

  const bool ok = built.all_incident() && built.bounds_hold() && report.pass &&
                  report.edge_count >= cond.solutions.size();
  if (!ok) std::cerr << "verification failed: construction or incidence bound check did not pass\n";
  return ok ? kOk : kFailed;
}

int run_gen_config(u64 seed, u64 c_max, std::size_t max_size, const std::string& out) {
  std::mt19937_64 rng(seed);
  coto::PrimeConfigurationParams params;
  params.c_max = c_max;
  params.max_points = max_size;
  params.max_lines = max_size;
  const coto::Configuration config = coto::random_prime_configuration(rng, params);
  emit(out, [&](std::ostream& os) { os << coto::format_configuration(config); });
  return kOk;
}

int run_verify(u64 seed, unsigned workers, const std::vector<int>& ids) {
  coto::acceptance::Options opts;
  opts.seed = seed;
  opts.workers = workers;
  const auto results = coto::acceptance::run(opts, ids, std::cout);
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  std::cout << (all ? "all criteria passed" : "some criteria FAILED") << '\n';
  return all ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cototient equation solver and point-line configuration checks"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "All n with n - phi(n) = c");
  solve->add_option("-c,--c", solve_args.c, "Right-hand side c (>= 2)")->required();
  solve->add_option("--B", solve_args.B, "Only solutions n = B p q with primes p < q not dividing B");
  solve->add_flag("--primal", solve_args.primal, "Only prime-power solutions");
  solve->add_option("--format", solve_args.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  u64 k = 0;
  auto* goldbach = app.add_subcommand("goldbach", "Unordered representations k = p + q, p <= q prime");
  goldbach->add_option("-k,--k", k, "k (>= 2)")->required();

  u64 classify_c = 0;
  std::string classify_format = "csv";
  auto* classify = app.add_subcommand("classify", "Solutions of n - phi(n) = c grouped by primal count");
  classify->add_option("-c,--c", classify_c, "Right-hand side c (>= 2)")->required();
  classify->add_option("--format", classify_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  std::vector<u64> values;
  u64 t = 0;
  auto* partition = app.add_subcommand("partition", "Split factors into two groups with products <= sqrt(n t)");
  partition->add_option("-t,--t", t, "Upper bound on every value")->required();
  partition->add_option("values", values, "Factors")->required();

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "Solution counts for a range of c");
  scan->add_option("--from", scan_args.from, "First c (>= 2)")->required();
  scan->add_option("--to", scan_args.to, "Last c")->required();
  scan->add_option("-w,--workers", scan_args.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  scan->add_option("-o,--out", scan_args.out, "Table or document output (default stdout)");
  scan->add_option("--summary", scan_args.summary, "Write the JSON summary here");
  scan->add_option("--solutions", scan_args.solutions, "Write 'c n' solution pairs here");
  scan->add_option("--format", scan_args.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("--slope-from", scan_args.slope_from, "First dyadic block used in the slope fit");
  scan->add_flag("--allow-large", scan_args.allow_large, "Permit c beyond the desk cap");

  ConfigArgs config_args;
  auto* config = app.add_subcommand("config", "Incidence checks on a configuration file");
  config->add_option("file", config_args.path, "Configuration JSON")->required()->check(CLI::ExistingFile);
  config->add_flag("--assert-forest", config_args.assert_forest, "Exit 1 if the incidence graph has a cycle");
  config->add_flag("--assert-prime", config_args.assert_prime, "Exit 1 if the configuration is not prime");
  config->add_flag("--assert-bound", config_args.assert_bound, "Exit 1 if the incidence bound check fails");
  config->add_flag("--classes", config_args.show_classes, "List divisor classes");

  u64 gen_seed = coto::acceptance::kDefaultSeed;
  u64 gen_c_max = 10000;
  std::size_t gen_size = 20;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen-config", "Write a seeded random prime configuration");
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("--c-max", gen_c_max, "Largest c")->check(CLI::Range(u64{1}, u64{1} << 32));
  gen->add_option("--size", gen_size, "Largest point and line count")->check(CLI::Range(1, 100000));
  gen->add_option("-o,--out", gen_out, "Output file (default stdout)");

  DiffArgs diff_args;
  auto* diff = app.add_subcommand("diff", "Solve f(n) - g(n) = c and run the configuration pipeline");
  diff->add_option("--f", diff_args.f, "id, phi, sigma, tau or file:PATH");
  diff->add_option("--g", diff_args.g, "id, phi, sigma, tau or file:PATH");
  diff->add_option("-c,--c", diff_args.c, "Right-hand side c (>= 1)")->required()->check(CLI::PositiveNumber);
  diff->add_option("--n-max", diff_args.n_max, "Search n in [2, n-max]")->required();
  diff->add_option("-t,--t", diff_args.t, "Smoothness bound (default: largest primal value)");
  diff->add_flag("--variant", diff_args.variant, "Bound primal g-values instead of f-values");
  diff->add_option("-w,--workers", diff_args.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  diff->add_option("--config-out", diff_args.config_out, "Write the constructed configuration here");

  u64 seed = coto::acceptance::kDefaultSeed;
  unsigned verify_workers = 8;
  std::vector<int> criteria;
  auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
  verify->add_option("--seed", seed, "Seed for the randomized checks");
  verify->add_option("-w,--workers", verify_workers, "Worker threads for the large scan")->check(CLI::Range(1u, 256u));
  verify->add_option("--criterion", criteria, "Run only these criteria (1-7)")->check(CLI::Range(1, 7));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*solve) return run_solve(solve_args);
    if (*goldbach) {
      std::cout << coto::goldbach_count(k) << '\n';
      return kOk;
    }
    if (*classify) return run_classify(classify_c, classify_format);
    if (*partition) return run_partition(values, t);
    if (*scan) return run_scan(scan_args);
    if (*config) return run_config(config_args);
    if (*gen) return run_gen_config(gen_seed, gen_c_max, gen_size, gen_out);
    if (*diff) return run_diff(diff_args);
    if (*verify) return run_verify(seed, verify_workers, criteria);
  } catch (const coto::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const coto::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const coto::ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const coto::ArithmeticError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
