#include "coto/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "coto/arith.hpp"

namespace coto {
namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr u64 kCoordinateCap = u64{1} << 40;

u64 uniform(std::mt19937_64& rng, u64 lo, u64 hi) { return std::uniform_int_distribution<u64>(lo, hi)(rng); }

// Inverse of x modulo m, assuming gcd(x, m) = 1 and m >= 2.
u64 mod_inverse(u64 x, u64 m) {
  i128 old_r = static_cast<i128>(x % m), r = m;
  i128 old_s = 1, s = 0;
  while (r != 0) {
    const i128 q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  i128 inv = old_s % static_cast<i128>(m);
  if (inv < 0) inv += m;
  return static_cast<u64>(inv);
}

// Smallest positive y with x y = -c (mod m), or 0 if gcd(x, m) != 1.
u64 solve_congruence(u64 x, u64 c, u64 m) {
  if (m == 1) return 1;
  if (std::gcd(x, m) != 1) return 0;
  const u64 neg_c = (m - c % m) % m;
  const u64 y = static_cast<u64>(static_cast<u128>(neg_c) * mod_inverse(x, m) % m);
  return y == 0 ? m : y;
}

}  // namespace

Configuration random_prime_configuration(std::mt19937_64& rng, const PrimeConfigurationParams& params) {
  const u64 c = uniform(rng, 1, params.c_max);
  const std::size_t target_m = uniform(rng, 1, params.max_points);
  const std::size_t target_n = uniform(rng, 1, params.max_lines);
  const u64 R = params.coordinate_bound;
  auto coprime = [c](u64 x) { return std::gcd(x, c) == 1; };

  std::vector<Point> points;
  std::vector<Line> lines;
  std::set<Point> point_set;
  std::set<Line> line_set;
  auto add_point = [&](Point p) {
    if (points.size() >= target_m || !coprime(p.A) || !coprime(p.a) || !point_set.insert(p).second) return false;
    points.push_back(p);
    return true;
  };
  auto add_line = [&](Line l) {
    if (lines.size() >= target_n || !coprime(l.B) || !coprime(l.b) || !line_set.insert(l).second) return false;
    lines.push_back(l);
    return true;
  };

  // Split a b + c into A B over a random divisor.
  auto divisor_pair = [&] {
    const u64 a = uniform(rng, 1, R);
    const u64 b = uniform(rng, 1, R);
    const u64 N = a * b + c;
    const auto divs = divisors(N);
    const u64 A = divs[uniform(rng, 0, divs.size() - 1)];
    const Point p{A, a};
    const Line l{N / A, b};
    if (!coprime(p.A) || !coprime(p.a) || !coprime(l.B) || !coprime(l.b)) return;
    if (!point_set.contains(p) && points.size() >= target_m) return;
    if (!line_set.contains(l) && lines.size() >= target_n) return;
    add_point(p);
    add_line(l);
  };

  const std::size_t attempts = 20 * (target_m + target_n);
  for (std::size_t step = 0; step < attempts; ++step) {
    if (points.size() >= target_m && lines.size() >= target_n) break;
    const u64 kind = uniform(rng, 0, 3);
    if (kind == 0 || points.empty() || lines.empty()) {
      divisor_pair();
      continue;
    }
    const u64 k = uniform(rng, 0, 3);
    if (kind == 1 && lines.size() < target_n) {
      // New line through an existing point: A B - a b = c.
      const Point& p = points[uniform(rng, 0, points.size() - 1)];
      const u64 b0 = solve_congruence(p.a, c, p.A);
      if (b0 == 0) continue;
      const u128 b = static_cast<u128>(b0) + static_cast<u128>(k) * p.A;
      const u128 B = (static_cast<u128>(p.a) * b + c) / p.A;
      if (b > kCoordinateCap || B > kCoordinateCap) continue;
      add_line({static_cast<u64>(B), static_cast<u64>(b)});
    } else if (points.size() < target_m) {
      // New point on an existing line.
      const Line& l = lines[uniform(rng, 0, lines.size() - 1)];
      const u64 a0 = solve_congruence(l.b, c, l.B);
      if (a0 == 0) continue;
      const u128 a = static_cast<u128>(a0) + static_cast<u128>(k) * l.B;
      const u128 A = (a * l.b + c) / l.B;
      if (a > kCoordinateCap || A > kCoordinateCap) continue;
      add_point({static_cast<u64>(A), static_cast<u64>(a)});
    }
  }
  return Configuration(c, std::move(points), std::move(lines));
}

FactorMultiset random_factor_multiset(std::mt19937_64& rng, std::size_t max_k, u64 max_t) {
  FactorMultiset out;
  const std::size_t k = uniform(rng, 1, max_k);
  out.t = uniform(rng, 1, max_t);
  u64 product = 1;
  for (std::size_t i = 0; i < k; ++i) {
    const u64 headroom = std::numeric_limits<u64>::max() / product;
    const u64 v = uniform(rng, 1, std::min(out.t, headroom));
    out.values.push_back(v);
    product *= v;
  }
  return out;
}

}  // namespace coto
