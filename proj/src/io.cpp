#include "coto/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "coto/errors.hpp"
#include "json.hpp"

namespace coto {
namespace {

using nlohmann::json;

template <class T>
std::vector<T> parse_pairs(const json& doc, const char* key) {
  if (!doc.contains(key)) throw PreconditionError(std::string("configuration: missing '") + key + "'");
  const json& arr = doc.at(key);
  if (!arr.is_array()) throw PreconditionError(std::string("configuration: '") + key + "' must be an array");
  std::vector<T> out;
  for (const json& item : arr) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_unsigned() || !item[1].is_number_unsigned()) {
      throw PreconditionError(std::string("configuration: entries of '") + key +
                              "' must be pairs of non-negative integers");
    }
    out.push_back(T{item[0].get<u64>(), item[1].get<u64>()});
  }
  return out;
}

json summary_json(const ScanSummary& s) {
  json blocks = json::array();
  for (const auto& b : s.blocks) {
    blocks.push_back({{"j", b.j}, {"lo", b.lo}, {"hi", b.hi}, {"max_residual", b.max_residual},
                      {"argmax_c", b.argmax_c}});
  }
  json doc = {{"c_from", s.c_from},
              {"c_to", s.c_to},
              {"total_solutions", s.total_solutions},
              {"min_residual", s.min_residual},
              {"slope_from_block", s.slope_from_block},
              {"blocks", blocks}};
  doc["slope"] = s.slope ? json(*s.slope) : json(nullptr);
  return doc;
}

}  // namespace

Configuration parse_configuration(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw PreconditionError(std::string("configuration: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw PreconditionError("configuration: top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "c" && key != "points" && key != "lines") {
      throw PreconditionError("configuration: unknown key '" + key + "'");
    }
  }
  if (!doc.contains("c") || !doc["c"].is_number_unsigned()) {
    throw PreconditionError("configuration: 'c' must be a positive integer");
  }
  return Configuration(doc["c"].get<u64>(), parse_pairs<Point>(doc, "points"), parse_pairs<Line>(doc, "lines"));
}

std::string format_configuration(const Configuration& config) {
  json points = json::array();
  for (const auto& p : config.points()) points.push_back({p.A, p.a});
  json lines = json::array();
  for (const auto& l : config.lines()) lines.push_back({l.B, l.b});
  json doc = {{"c", config.c()}, {"points", points}, {"lines", lines}};
  return doc.dump() + "\n";
}

Configuration read_configuration(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open configuration file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_configuration(ss.str());
}

void write_configuration(const std::string& path, const Configuration& config) {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write configuration file " + path);
  out << format_configuration(config);
}

std::string format_histogram(const std::map<std::size_t, u64>& histogram) {
  std::string s;
  for (const auto& [k, count] : histogram) {
    if (!s.empty()) s += ';';
    s += std::to_string(k) + ':' + std::to_string(count);
  }
  return s;
}

void write_scan_table(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << "c,T,G,residual,histogram\n";
  for (const auto& r : rows) {
    out << r.c << ',' << r.T << ',' << r.G << ',' << r.residual << ',' << format_histogram(r.histogram) << '\n';
  }
}

void write_scan_summary(std::ostream& out, const ScanSummary& summary) {
  out << summary_json(summary).dump(2) << '\n';
}

void write_scan_document(std::ostream& out, const ScanResult& result) {
  json rows = json::array();
  for (const auto& r : result.rows) {
    json hist = json::object();
    for (const auto& [k, count] : r.histogram) hist[std::to_string(k)] = count;
    json row = {{"c", r.c}, {"T", r.T}, {"G", r.G}, {"residual", r.residual}, {"histogram", hist},
                {"max_n", r.max_n}};
    if (!r.solutions.empty()) row["solutions"] = r.solutions;
    rows.push_back(std::move(row));
  }
  json doc = {{"rows", rows}, {"summary", summary_json(result.summary)}};
  out << doc.dump(2) << '\n';
}

void write_solution_pairs(std::ostream& out, const std::vector<ScanRow>& rows) {
  for (const auto& r : rows) {
    for (u64 n : r.solutions) out << r.c << ' ' << n << '\n';
  }
}

}  // namespace coto
