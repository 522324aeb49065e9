#pragma once

// On-disk formats.
//
// Configuration document (JSON):
//   {"c": 8, "points": [[3, 1], [2, 1]], "lines": [[5, 7], [5, 2]]}
// points are [A, a], lines are [B, b] for Bx - by = c. Unknown keys are
// rejected so typos do not pass silently.
//
// Scan table (CSV, one row per c, header first):
//   c,T,G,residual,histogram
//   8,3,1,2,1:1;2:2
// histogram lists primal_count:count pairs in ascending key order joined by
// ';', empty when T = 0.
//
// Solutions list: "c n" per line, rows ascending in c then n.

#include <iosfwd>
#include <string>
#include <vector>

#include "coto/cototient.hpp"
#include "coto/geometry.hpp"

namespace coto {

/// Throws PreconditionError on malformed documents.
Configuration parse_configuration(const std::string& text);
std::string format_configuration(const Configuration& config);
Configuration read_configuration(const std::string& path);
void write_configuration(const std::string& path, const Configuration& config);

std::string format_histogram(const std::map<std::size_t, u64>& histogram);

void write_scan_table(std::ostream& out, const std::vector<ScanRow>& rows);
void write_scan_summary(std::ostream& out, const ScanSummary& summary);
/// Rows and summary as one JSON document.
void write_scan_document(std::ostream& out, const ScanResult& result);
void write_solution_pairs(std::ostream& out, const std::vector<ScanRow>& rows);

}  // namespace coto
