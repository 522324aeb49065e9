#include "coto/diffscan.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>

#include "coto/errors.hpp"
#include "coto/parallel.hpp"
#include "coto/partition.hpp"

namespace coto {
namespace {

using u128 = unsigned __int128;

struct Values {
  u64 f = 0;
  u64 g = 0;
};

Values evaluate(const MultiplicativeFunctionSpec& f, const MultiplicativeFunctionSpec& g, u64 n,
                const FactorTable& table) {
  try {
    const Factorization fac = factorize(n, &table);
    return {eval_mult(f, fac), eval_mult(g, fac)};
  } catch (const ArithmeticError& e) {
    throw ArithmeticError("value overflow at n = " + std::to_string(n) + " (" + e.what() + ")");
  }
}

std::vector<Values> evaluate_range(const MultiplicativeFunctionSpec& f, const MultiplicativeFunctionSpec& g,
                                   u64 n_max, unsigned workers) {
  const FactorTable table(std::max<u64>(n_max, 2));
  std::vector<Values> out(n_max + 1);
  if (n_max >= 1) out[1] = {1, 1};
  if (n_max < 2) return out;
  parallel_for(n_max - 1, workers, 4096, [&](std::size_t i) { out[i + 2] = evaluate(f, g, i + 2, table); });
  return out;
}

Census census(const std::vector<Values>& values, bool use_f) {
  std::vector<u64> sorted;
  sorted.reserve(values.size());
  for (std::size_t n = 1; n < values.size(); ++n) sorted.push_back(use_f ? values[n].f : values[n].g);
  std::sort(sorted.begin(), sorted.end());
  Census out;
  const u64 n_max = values.size() - 1;
  for (u64 x = 1; x <= n_max && x != 0; x *= 2) {
    const auto count = static_cast<u64>(std::upper_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
    const double ratio = static_cast<double>(count) / static_cast<double>(x);
    if (ratio > out.max_ratio) {
      out.max_ratio = ratio;
      out.at_x = x;
    }
  }
  return out;
}

Verdict smooth_verdict(const std::vector<u64>& solutions, const MultiplicativeFunctionSpec& h, u64 t) {
  Verdict v;
  for (u64 n : solutions) {
    const auto vals = primal_values(h, factorize(n));
    if (std::any_of(vals.begin(), vals.end(), [t](u64 x) { return x > t; })) {
      v.holds = false;
      v.witness = n;
      v.detail = "n = " + std::to_string(n) + " has a primal " + h.name + "-value above t = " + std::to_string(t);
      return v;
    }
  }
  v.detail = "all " + std::to_string(solutions.size()) + " solutions have primal " + h.name + "-values <= " +
             std::to_string(t);
  return v;
}

}  // namespace

std::vector<u64> scan_difference(const MultiplicativeFunctionSpec& f, const MultiplicativeFunctionSpec& g, u64 c,
                                 u64 n_max, unsigned workers) {
  if (n_max < 2) return {};
  const auto values = evaluate_range(f, g, n_max, workers);
  std::vector<u64> out;
  for (u64 n = 2; n <= n_max; ++n) {
    if (values[n].f >= values[n].g && values[n].f - values[n].g == c) out.push_back(n);
  }
  return out;
}

u64 max_primal_value(const std::vector<u64>& solutions, const MultiplicativeFunctionSpec& h) {
  u64 t = 1;
  for (u64 n : solutions) {
    for (u64 v : primal_values(h, factorize(n))) t = std::max(t, v);
  }
  return t;
}

std::vector<u64> smoothness_filter(const std::vector<u64>& solutions, const MultiplicativeFunctionSpec& h, u64 t) {
  std::vector<u64> out;
  for (u64 n : solutions) {
    const auto vals = primal_values(h, factorize(n));
    if (std::all_of(vals.begin(), vals.end(), [t](u64 x) { return x <= t; })) out.push_back(n);
  }
  return out;
}

ConditionReport check_conditions(const MultiplicativeFunctionSpec& f, const MultiplicativeFunctionSpec& g, u64 c,
                                 u64 n_max, u64 t, unsigned workers) {
  ConditionReport r;
  r.n_max = n_max;
  const auto values = evaluate_range(f, g, n_max, workers);

  r.f_exceeds_g.detail = "f(n) > g(n) on [2, " + std::to_string(n_max) + "]";
  for (u64 n = 2; n <= n_max; ++n) {
    if (values[n].f <= values[n].g) {
      r.f_exceeds_g.holds = false;
      r.f_exceeds_g.witness = n;
      r.f_exceeds_g.detail = f.name + "(" + std::to_string(n) + ") = " + std::to_string(values[n].f) +
                             " <= " + g.name + "(" + std::to_string(n) + ") = " + std::to_string(values[n].g);
      break;
    }
  }

  std::map<std::pair<u64, u64>, u64> first_seen;
  r.pair_injective.detail = "pairs (f(n), g(n)) distinct on [1, " + std::to_string(n_max) + "]";
  for (u64 n = 1; n <= n_max; ++n) {
    auto [it, fresh] = first_seen.emplace(std::pair(values[n].f, values[n].g), n);
    if (!fresh) {
      r.pair_injective.holds = false;
      r.pair_injective.witness = n;
      r.pair_injective.detail = "n = " + std::to_string(it->second) + " and n = " + std::to_string(n) +
                                " share (" + std::to_string(values[n].f) + ", " + std::to_string(values[n].g) + ")";
      break;
    }
  }

  for (u64 n = 2; n <= n_max; ++n) {
    if (values[n].f >= values[n].g && values[n].f - values[n].g == c) r.solutions.push_back(n);
  }
  r.equation.detail = std::to_string(r.solutions.size()) + " solutions of f - g = " + std::to_string(c) +
                      " on [2, " + std::to_string(n_max) + "]";
  for (u64 n : r.solutions) {
    const Factorization fac = factorize(n);
    if (eval_mult(f, fac) - eval_mult(g, fac) != c) {
      r.equation.holds = false;
      r.equation.witness = n;
      break;
    }
  }

  r.f_census = census(values, true);
  r.g_census = census(values, false);
  r.t = t != 0 ? t : max_primal_value(r.solutions, f);
  r.f_smooth = smooth_verdict(r.solutions, f, r.t);
  r.g_smooth = smooth_verdict(r.solutions, g, r.t);
  return r;
}

bool ConstructedConfiguration::all_incident() const {
  return std::all_of(embeddings.begin(), embeddings.end(), [&](const Embedding& e) {
    return is_incident(config.points()[e.point], config.lines()[e.line], config.c());
  });
}

bool ConstructedConfiguration::bounds_hold() const {
  return std::all_of(embeddings.begin(), embeddings.end(),
                     [](const Embedding& e) { return e.split_bound && e.chain_bound; });
}

ConstructedConfiguration solutions_to_configuration(const DifferenceInstance& instance, SmoothSide side) {
  const MultiplicativeFunctionSpec& h = side == SmoothSide::f ? instance.f : instance.g;
  const u64 t = instance.t != 0 ? instance.t : max_primal_value(instance.solutions, h);

  std::vector<u64> offending;
  for (u64 n : instance.solutions) {
    const auto vals = primal_values(h, factorize(n));
    if (std::any_of(vals.begin(), vals.end(), [t](u64 x) { return x > t; })) offending.push_back(n);
  }
  if (!offending.empty()) {
    std::ostringstream os;
    os << "solutions_to_configuration: primal " << h.name << "-values exceed t = " << t << " for n =";
    for (u64 n : offending) os << ' ' << n;
    throw PreconditionError(os.str());
  }

  std::map<Point, std::size_t> point_index;
  std::map<Line, std::size_t> line_index;
  std::vector<Point> points;
  std::vector<Line> lines;
  std::vector<u64> point_mult;
  std::vector<u64> line_mult;
  std::vector<Embedding> embeddings;

  const u128 c = instance.c;
  const u128 tt = t;
  for (u64 n : instance.solutions) {
    const Factorization fac = factorize(n);
    const auto vals = primal_values(h, fac);
    const SplitResult split = balanced_split(vals, t);
    Factorization fa{1, {}};
    Factorization fb{1, {}};
    for (std::size_t i : split.group_a) {
      fa.parts.push_back(fac.parts[i]);
      fa.n *= fac.parts[i].value();
    }
    for (std::size_t i : split.group_b) {
      fb.parts.push_back(fac.parts[i]);
      fb.n *= fac.parts[i].value();
    }

    const Point pt{eval_mult(instance.f, fa), eval_mult(instance.g, fa)};
    const Line ln{eval_mult(instance.f, fb), eval_mult(instance.g, fb)};
    auto [pit, pnew] = point_index.try_emplace(pt, points.size());
    if (pnew) {
      points.push_back(pt);
      point_mult.push_back(0);
    }
    auto [lit, lnew] = line_index.try_emplace(ln, lines.size());
    if (lnew) {
      lines.push_back(ln);
      line_mult.push_back(0);
    }
    ++point_mult[pit->second];
    ++line_mult[lit->second];

    Embedding e;
    e.n = n;
    e.a = fa.n;
    e.b = fb.n;
    e.point = pit->second;
    e.line = lit->second;
    e.f_n = eval_mult(instance.f, fac);
    e.f_a = pt.A;
    e.f_b = ln.B;
    const u128 h_n = eval_mult(h, fac);
    const u128 h_a = side == SmoothSide::f ? pt.A : pt.a;
    const u128 h_b = side == SmoothSide::f ? ln.B : ln.b;
    e.split_bound = h_a * h_a <= h_n * tt && h_b * h_b <= h_n * tt;
    if (side == SmoothSide::f) {
      const u128 t2c = tt * tt * c;
      e.chain_bound = h_a * h_a <= t2c && h_b * h_b <= t2c && static_cast<u128>(e.f_n) <= c * tt;
    }
    embeddings.push_back(e);
  }

  return ConstructedConfiguration{Configuration(instance.c, std::move(points), std::move(lines)), t, side,
                                  std::move(embeddings), std::move(point_mult), std::move(line_mult)};
}

}  // namespace coto
