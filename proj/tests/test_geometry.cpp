#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "coto/arith.hpp"
#include "coto/cototient.hpp"
#include "coto/diffscan.hpp"
#include "coto/errors.hpp"
#include "coto/generators.hpp"
#include "coto/geometry.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace coto;

TEST_CASE("configuration validation") {
  CHECK_THROWS_AS(Configuration(0, {}, {}), PreconditionError);
  CHECK_THROWS_AS(Configuration(8, {{0, 1}}, {}), PreconditionError);
  CHECK_THROWS_AS(Configuration(8, {}, {{1, 0}}), PreconditionError);
  CHECK_THROWS_AS(Configuration(8, {{3, 1}, {3, 1}}, {}), PreconditionError);
  CHECK_THROWS_AS(Configuration(8, {}, {{5, 7}, {5, 7}}), PreconditionError);
  CHECK_NOTHROW(Configuration(8, {{3, 1}}, {{3, 1}}));
}

TEST_CASE("is_incident") {
  CHECK(is_incident({3, 1}, {5, 7}, 8));
  CHECK_FALSE(is_incident({1, 1}, {1, 1}, 1));
  CHECK(is_incident({2, 1}, {5, 2}, 8));
  const u64 big = u64{1} << 40;
  CHECK(is_incident({big, big}, {big + 1, big}, big));
  CHECK_FALSE(is_incident({1, 5}, {1, 1}, 1));  // A B < a b
}

TEST_CASE("incidence_graph") {
  const Configuration cfg(8, {{3, 1}, {2, 1}}, {{5, 7}, {5, 2}});
  const IncidenceGraph g = incidence_graph(cfg);
  CHECK(g.m == 2);
  CHECK(g.n == 2);
  CHECK(g.edges == std::vector<Edge>{{0, 0}, {1, 1}});
  CHECK(g.szemeredi_trotter_reference() == doctest::Approx(std::pow(4.0, 2.0 / 3.0) + 4));

  const IncidenceGraph empty = incidence_graph(Configuration(8, {}, {{5, 7}}));
  CHECK(empty.edges.empty());
}

TEST_CASE("is_prime_configuration") {
  CHECK(is_prime_configuration(Configuration(8, {{3, 1}}, {{5, 7}})));
  CHECK_FALSE(is_prime_configuration(Configuration(8, {{2, 1}}, {{5, 2}})));
  CHECK(is_prime_configuration(Configuration(1, {{2, 4}, {6, 8}}, {{10, 12}})));
}

TEST_CASE("find_cycle") {
  const Configuration matching(8, {{3, 1}, {2, 1}}, {{5, 7}, {5, 2}});
  CHECK_FALSE(find_cycle(incidence_graph(matching)).has_value());

  const auto witness = oracle::find_six_cycle(2, 50);
  REQUIRE(witness.has_value());
  const Configuration cyclic(witness->c, witness->points, witness->lines);
  CHECK_FALSE(is_prime_configuration(cyclic));
  const IncidenceGraph g = incidence_graph(cyclic);
  const auto cycle = find_cycle(g);
  REQUIRE(cycle.has_value());
  REQUIRE(cycle->size() == 6);
  // Alternating sides, consecutive vertices incident, no repeats.
  std::set<std::pair<int, std::size_t>> seen;
  for (std::size_t i = 0; i < cycle->size(); ++i) {
    const Vertex& u = (*cycle)[i];
    const Vertex& v = (*cycle)[(i + 1) % cycle->size()];
    REQUIRE(u.side != v.side);
    const Vertex& p = u.side == Vertex::Side::point ? u : v;
    const Vertex& l = u.side == Vertex::Side::point ? v : u;
    REQUIRE(is_incident(cyclic.points()[p.index], cyclic.lines()[l.index], cyclic.c()));
    seen.insert({static_cast<int>(u.side), u.index});
  }
  CHECK(seen.size() == 6);
  CHECK(describe_cycle(*cycle, cyclic).find("->") != std::string::npos);
}

TEST_CASE("find_cycle on longer cycles and forests") {
  // Abstract graphs: an 8-cycle plus a pendant tree.
  IncidenceGraph g;
  g.m = 5;
  g.n = 5;
  g.edges = {{0, 0}, {0, 3}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {4, 4}, {4, 3}};
  std::sort(g.edges.begin(), g.edges.end());
  const auto cycle = find_cycle(g);
  REQUIRE(cycle.has_value());
  CHECK(cycle->size() == 8);

  IncidenceGraph tree;
  tree.m = 4;
  tree.n = 3;
  tree.edges = {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}};
  CHECK_FALSE(find_cycle(tree).has_value());
}

TEST_CASE("decompose examples") {
  const Configuration a(8, {{3, 1}}, {{5, 7}});
  const auto ca = decompose(a);
  REQUIRE(ca.size() == 1);
  CHECK(ca[0].key() == std::tuple(u64{1}, u64{1}, u64{1}, u64{1}, u64{1}));
  CHECK(ca[0].reduced_points == std::vector<Point>{{3, 1}});
  CHECK(ca[0].reduced_lines == std::vector<Line>{{5, 7}});

  const Configuration b(8, {{2, 1}}, {{6, 4}});
  const auto cb = decompose(b);
  REQUIRE(cb.size() == 1);
  const DivisorClass& k = cb[0];
  CHECK(k.l == 4);
  CHECK(k.l1 == 2);
  CHECK(k.l2 == 2);
  CHECK(k.l3 == 1);
  CHECK(k.l4 == 4);
  CHECK(k.reduced_c == 2);
  CHECK(k.reduced_points == std::vector<Point>{{1, 1}});
  CHECK(k.reduced_lines == std::vector<Line>{{3, 1}});
  CHECK(is_prime_configuration(k.reduced_configuration()));

  const CototientSolver solver(8);
  DifferenceInstance inst{identity_function(), totient_function(), 8, solver.solve(8), 16};
  const auto built = solutions_to_configuration(inst);
  CHECK(decompose(built.config).size() <= 64);
}

TEST_CASE("verify_incidence_bound examples") {
  const auto r = verify_incidence_bound(Configuration(8, {{3, 1}}, {{5, 7}}));
  CHECK(r.edge_count == 1);
  CHECK(r.tau_c == 4);
  CHECK(r.bound == 2 * 64);
  CHECK(r.pass);

  const auto e = verify_incidence_bound(Configuration(8, {}, {}));
  CHECK(e.edge_count == 0);
  CHECK(e.class_count == 0);
  CHECK(e.pass);
}

namespace {

void check_decomposition(const Configuration& cfg) {
  const IncidenceGraph g = incidence_graph(cfg);
  const auto classes = decompose(cfg, g);
  std::vector<int> hit(g.edges.size(), 0);
  std::set<std::tuple<u64, u64, u64>> triples;
  for (const auto& cls : classes) {
    REQUIRE(cls.l == cls.l1 * cls.l2);
    REQUIRE(cls.l == cls.l3 * cls.l4);
    REQUIRE(cfg.c() % cls.l == 0);
    REQUIRE(cls.reduced_c * cls.l == cfg.c());
    const Configuration reduced = cls.reduced_configuration();
    REQUIRE(is_prime_configuration(reduced));
    REQUIRE_FALSE(find_cycle(incidence_graph(reduced)).has_value());
    triples.insert({cls.l, cls.l2, cls.l4});
    for (std::size_t e : cls.class_edges) {
      ++hit[e];
      const Point& p = cfg.points()[g.edges[e].point];
      const Line& l = cfg.lines()[g.edges[e].line];
      REQUIRE(p.A % cls.l1 == 0);
      REQUIRE(p.a % cls.l3 == 0);
      REQUIRE(l.B % cls.l2 == 0);
      REQUIRE(l.b % cls.l4 == 0);
      REQUIRE(is_incident({p.A / cls.l1, p.a / cls.l3}, {l.B / cls.l2, l.b / cls.l4}, cls.reduced_c));
    }
  }
  for (int h : hit) REQUIRE(h == 1);
  REQUIRE(triples.size() == classes.size());
  const u64 tau = divisor_count(cfg.c());
  REQUIRE(classes.size() <= tau * tau * tau);
}

}  // namespace

TEST_CASE("decomposition is a partition into prime classes") {
  const auto witness = oracle::find_six_cycle(2, 50);
  REQUIRE(witness.has_value());
  check_decomposition(Configuration(witness->c, witness->points, witness->lines));

  // Dense non-prime configurations: every (A, a) and (B, b) up to a bound.
  for (u64 c : {4, 6, 8, 12, 30, 36}) {
    std::vector<Point> pts;
    std::vector<Line> lns;
    for (u64 x = 1; x <= 24; ++x) {
      for (u64 y = 1; y <= 24; ++y) {
        pts.push_back({x, y});
        lns.push_back({x, y});
      }
    }
    const Configuration cfg(c, pts, lns);
    check_decomposition(cfg);
    CHECK(verify_incidence_bound(cfg).pass);
  }
}

TEST_CASE("incidence_graph never sees a 4-cycle") {
  for (u64 c = 1; c <= 12; ++c) {
    std::vector<Point> pts;
    for (u64 x = 1; x <= 30; ++x) {
      for (u64 y = 1; y <= 30; ++y) pts.push_back({x, y});
    }
    std::vector<Line> lines;
    for (const auto& p : pts) lines.push_back({p.A, p.a});
    CHECK_NOTHROW(incidence_graph(Configuration(c, pts, lines)));
  }
}

TEST_CASE("random prime configurations are forests") {
  std::mt19937_64 rng(1234);
  u64 edges = 0;
  for (int i = 0; i < 500; ++i) {
    const Configuration cfg = random_prime_configuration(rng);
    REQUIRE(is_prime_configuration(cfg));
    const IncidenceGraph g = incidence_graph(cfg);
    REQUIRE_FALSE(find_cycle(g).has_value());
    REQUIRE(g.edges.size() <= g.m + g.n);
    edges += g.edges.size();
    check_decomposition(cfg);
  }
  CHECK(edges > 500);  // the generator really produces incidences
}
