#pragma once

// Normed natural point-line configurations: integer points (A, a) and lines
// (B, b) standing for Bx - by = c, all sharing the same free term c.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace coto {

using u64 = std::uint64_t;

struct Point {
  u64 A = 1;
  u64 a = 1;
  friend auto operator<=>(const Point&, const Point&) = default;
};

struct Line {
  u64 B = 1;
  u64 b = 1;
  friend auto operator<=>(const Line&, const Line&) = default;
};

/// Immutable configuration. Construction rejects c = 0, zero coordinates and
/// repeated points or lines (PreconditionError).
class Configuration {
 public:
  Configuration(u64 c, std::vector<Point> points, std::vector<Line> lines);

  u64 c() const { return c_; }
  const std::vector<Point>& points() const { return points_; }
  const std::vector<Line>& lines() const { return lines_; }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  u64 c_;
  std::vector<Point> points_;
  std::vector<Line> lines_;
};

struct Edge {
  std::size_t point = 0;
  std::size_t line = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct IncidenceGraph {
  std::size_t m = 0;  // points
  std::size_t n = 0;  // lines
  std::vector<Edge> edges;  // sorted by (point, line)

  /// (m n)^(2/3) + m + n, the shape of the general incidence bound. Report only.
  double szemeredi_trotter_reference() const;
};

/// A*B - a*b == c, computed without overflow.
bool is_incident(const Point& point, const Line& line, u64 c);

/// All incident pairs. Throws std::logic_error if two distinct points share
/// two distinct lines, which cannot happen for distinct integer data.
IncidenceGraph incidence_graph(const Configuration& config);

/// Every coordinate of every point and line is coprime to c.
bool is_prime_configuration(const Configuration& config);

struct Vertex {
  enum class Side { point, line };
  Side side = Side::point;
  std::size_t index = 0;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// A cycle in the bipartite incidence graph as an alternating vertex list;
/// the last vertex is adjacent to the first. Absent means the graph is a forest.
std::optional<std::vector<Vertex>> find_cycle(const IncidenceGraph& graph);

/// One reduced sub-configuration of the divisor-class decomposition.
/// Every edge (A,a)-(B,b) belongs to the class given by
///   l = gcd(A B, c), l1 = gcd(A, l), l2 = l / l1, l3 = gcd(a, l), l4 = l / l3
/// and reduces to (A/l1, a/l3), (B/l2, b/l4) with free term c/l.
struct DivisorClass {
  u64 l = 1, l1 = 1, l2 = 1, l3 = 1, l4 = 1;
  u64 reduced_c = 1;
  std::vector<std::size_t> point_indices;  // original indices, ascending
  std::vector<std::size_t> line_indices;
  std::vector<Point> reduced_points;       // parallel to point_indices
  std::vector<Line> reduced_lines;         // parallel to line_indices
  std::vector<std::size_t> class_edges;    // indices into IncidenceGraph::edges

  auto key() const { return std::tuple(l, l1, l2, l3, l4); }
  Configuration reduced_configuration() const;
};

/// Classes in ascending key order; together their class_edges partition the edges.
std::vector<DivisorClass> decompose(const Configuration& config, const IncidenceGraph& graph);
std::vector<DivisorClass> decompose(const Configuration& config);

struct IncidenceBoundReport {
  u64 edge_count = 0;
  u64 m = 0;
  u64 n = 0;
  u64 tau_c = 0;
  u64 bound = 0;  // (m + n) tau(c)^3
  double st_reference = 0;
  std::size_t class_count = 0;
  std::vector<u64> per_class_sizes;
  bool classes_prime = true;
  bool classes_forest = true;
  bool class_sizes_ok = true;
  bool pass = true;
};

IncidenceBoundReport verify_incidence_bound(const Configuration& config);

std::string to_string(const Vertex& v);
std::string describe_cycle(const std::vector<Vertex>& cycle, const Configuration& config);

}  // namespace coto
