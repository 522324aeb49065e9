#include "coto/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "coto/arith.hpp"
#include "coto/errors.hpp"

namespace coto {

using u128 = unsigned __int128;

Configuration::Configuration(u64 c, std::vector<Point> points, std::vector<Line> lines)
    : c_(c), points_(std::move(points)), lines_(std::move(lines)) {
  if (c_ == 0) throw PreconditionError("configuration: c must be >= 1");
  for (const auto& p : points_) {
    if (p.A == 0 || p.a == 0) throw PreconditionError("configuration: point coordinates must be >= 1");
  }
  for (const auto& l : lines_) {
    if (l.B == 0 || l.b == 0) throw PreconditionError("configuration: line coefficients must be >= 1");
  }
  std::set<Point> seen_points(points_.begin(), points_.end());
  if (seen_points.size() != points_.size()) throw PreconditionError("configuration: repeated point");
  std::set<Line> seen_lines(lines_.begin(), lines_.end());
  if (seen_lines.size() != lines_.size()) throw PreconditionError("configuration: repeated line");
}

double IncidenceGraph::szemeredi_trotter_reference() const {
  const double mn = static_cast<double>(m) * static_cast<double>(n);
  return std::cbrt(mn * mn) + static_cast<double>(m) + static_cast<double>(n);
}

bool is_incident(const Point& point, const Line& line, u64 c) {
  const u128 lhs = static_cast<u128>(point.A) * line.B;
  const u128 rhs = static_cast<u128>(point.a) * line.b + c;
  return lhs == rhs;
}

IncidenceGraph incidence_graph(const Configuration& config) {
  IncidenceGraph g;
  g.m = config.points().size();
  g.n = config.lines().size();
  const auto& points = config.points();
  const auto& lines = config.lines();
  for (std::size_t i = 0; i < g.m; ++i) {
    for (std::size_t j = 0; j < g.n; ++j) {
      if (is_incident(points[i], lines[j], config.c())) g.edges.push_back({i, j});
    }
  }

  // Two distinct lines meet in at most one point.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> line_pairs;
  for (std::size_t e = 0; e < g.edges.size();) {
    std::size_t end = e;
    while (end < g.edges.size() && g.edges[end].point == g.edges[e].point) ++end;
    for (std::size_t x = e; x < end; ++x) {
      for (std::size_t y = x + 1; y < end; ++y) {
        auto [it, fresh] = line_pairs.emplace(std::pair(g.edges[x].line, g.edges[y].line), g.edges[e].point);
        if (!fresh) {
          throw std::logic_error("incidence graph has a 4-cycle through points " + std::to_string(it->second) +
                                 " and " + std::to_string(g.edges[e].point));
        }
      }
    }
    e = end;
  }
  return g;
}

bool is_prime_configuration(const Configuration& config) {
  const u64 c = config.c();
  auto coprime = [c](u64 x) { return std::gcd(x, c) == 1; };
  for (const auto& p : config.points()) {
    if (!coprime(p.A) || !coprime(p.a)) return false;
  }
  for (const auto& l : config.lines()) {
    if (!coprime(l.B) || !coprime(l.b)) return false;
  }
  return true;
}

std::optional<std::vector<Vertex>> find_cycle(const IncidenceGraph& graph) {
  // Vertices 0..m-1 are points, m..m+n-1 are lines.
  const std::size_t total = graph.m + graph.n;
  std::vector<std::vector<std::size_t>> adj(total);
  for (const auto& e : graph.edges) {
    adj[e.point].push_back(graph.m + e.line);
    adj[graph.m + e.line].push_back(e.point);
  }
  auto to_vertex = [&](std::size_t v) {
    return v < graph.m ? Vertex{Vertex::Side::point, v} : Vertex{Vertex::Side::line, v - graph.m};
  };

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(total, kNone);
  std::vector<std::size_t> depth(total, 0);
  std::vector<bool> visited(total, false);

  for (std::size_t root = 0; root < total; ++root) {
    if (visited[root]) continue;
    visited[root] = true;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == adj[v].size()) {
        stack.pop_back();
        continue;
      }
      const std::size_t w = adj[v][next++];
      if (w == parent[v]) continue;
      if (!visited[w]) {
        visited[w] = true;
        parent[w] = v;
        depth[w] = depth[v] + 1;
        stack.emplace_back(w, 0);
        continue;
      }
      // Back edge v -> w closes a cycle: walk both ends up to their meeting point.
      std::size_t x = v;
      std::size_t y = w;
      std::vector<std::size_t> left;
      std::vector<std::size_t> right;
      while (depth[x] > depth[y]) {
        left.push_back(x);
        x = parent[x];
      }
      while (depth[y] > depth[x]) {
        right.push_back(y);
        y = parent[y];
      }
      while (x != y) {
        left.push_back(x);
        right.push_back(y);
        x = parent[x];
        y = parent[y];
      }
      left.push_back(x);
      std::vector<Vertex> cycle;
      for (std::size_t u : left) cycle.push_back(to_vertex(u));
      for (auto it = right.rbegin(); it != right.rend(); ++it) cycle.push_back(to_vertex(*it));
      return cycle;
    }
  }
  return std::nullopt;
}

Configuration DivisorClass::reduced_configuration() const {
  return Configuration(reduced_c, reduced_points, reduced_lines);
}

std::vector<DivisorClass> decompose(const Configuration& config, const IncidenceGraph& graph) {
  const u64 c = config.c();
  std::map<std::tuple<u64, u64, u64, u64, u64>, DivisorClass> classes;
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const Point& p = config.points()[graph.edges[e].point];
    const Line& ln = config.lines()[graph.edges[e].line];
    const u64 ab_mod_c = static_cast<u64>(static_cast<u128>(p.A % c) * (ln.B % c) % c);
    const u64 l = std::gcd(ab_mod_c, c);
    const u64 l1 = std::gcd(p.A, l);
    const u64 l3 = std::gcd(p.a, l);
    const auto key = std::tuple(l, l1, l / l1, l3, l / l3);
    auto [it, fresh] = classes.try_emplace(key);
    DivisorClass& cls = it->second;
    if (fresh) {
      std::tie(cls.l, cls.l1, cls.l2, cls.l3, cls.l4) = key;
      cls.reduced_c = c / l;
    }
    cls.class_edges.push_back(e);
  }

  std::vector<DivisorClass> out;
  out.reserve(classes.size());
  for (auto& [key, cls] : classes) {
    for (std::size_t e : cls.class_edges) {
      cls.point_indices.push_back(graph.edges[e].point);
      cls.line_indices.push_back(graph.edges[e].line);
    }
    for (auto* v : {&cls.point_indices, &cls.line_indices}) {
      std::sort(v->begin(), v->end());
      v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    for (std::size_t i : cls.point_indices) {
      const Point& p = config.points()[i];
      if (p.A % cls.l1 != 0 || p.a % cls.l3 != 0) throw std::logic_error("decompose: point not divisible by class");
      cls.reduced_points.push_back({p.A / cls.l1, p.a / cls.l3});
    }
    for (std::size_t j : cls.line_indices) {
      const Line& ln = config.lines()[j];
      if (ln.B % cls.l2 != 0 || ln.b % cls.l4 != 0) throw std::logic_error("decompose: line not divisible by class");
      cls.reduced_lines.push_back({ln.B / cls.l2, ln.b / cls.l4});
    }
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<DivisorClass> decompose(const Configuration& config) {
  return decompose(config, incidence_graph(config));
}

IncidenceBoundReport verify_incidence_bound(const Configuration& config) {
  const IncidenceGraph graph = incidence_graph(config);
  IncidenceBoundReport r;
  r.edge_count = graph.edges.size();
  r.m = graph.m;
  r.n = graph.n;
  r.tau_c = divisor_count(config.c());
  r.bound = checked_mul(r.m + r.n, checked_pow(r.tau_c, 3));
  r.st_reference = graph.szemeredi_trotter_reference();

  const auto classes = decompose(config, graph);
  r.class_count = classes.size();
  for (const auto& cls : classes) {
    r.per_class_sizes.push_back(cls.class_edges.size());
    const Configuration reduced = cls.reduced_configuration();
    if (!is_prime_configuration(reduced)) r.classes_prime = false;
    if (find_cycle(incidence_graph(reduced))) r.classes_forest = false;
    if (cls.class_edges.size() > r.m + r.n) r.class_sizes_ok = false;
  }
  const bool class_count_ok = r.class_count <= checked_pow(r.tau_c, 3);
  r.pass = r.edge_count <= r.bound && r.classes_prime && r.classes_forest && r.class_sizes_ok && class_count_ok;
  return r;
}

std::string to_string(const Vertex& v) {
  return (v.side == Vertex::Side::point ? "P" : "L") + std::to_string(v.index);
}

std::string describe_cycle(const std::vector<Vertex>& cycle, const Configuration& config) {
  std::ostringstream os;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i > 0) os << " -> ";
    const Vertex& v = cycle[i];
    if (v.side == Vertex::Side::point) {
      const Point& p = config.points()[v.index];
      os << "P" << v.index << "(" << p.A << "," << p.a << ")";
    } else {
      const Line& l = config.lines()[v.index];
      os << "L" << v.index << "[" << l.B << "," << l.b << "]";
    }
  }
  return os.str();
}

}  // namespace coto
