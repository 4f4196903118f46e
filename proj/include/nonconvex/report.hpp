#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "nonconvex/io.hpp"
#include "nonconvex/measures.hpp"
#include "nonconvex/verifiers.hpp"

namespace nonconvex {

inline constexpr int kSchemaVersion = 1;

// Table cell: display text ("p/q", "sqrt(p/q)", "[lo, hi]" or plain) plus a plotting value.
struct Cell {
  std::string text;
  double value = NAN;
  bool numeric() const { return !std::isnan(value); }
};
bool operator==(const Cell& a, const Cell& b);
bool operator==(const VerifierReport& a, const VerifierReport& b);

struct Report {
  int schema_version = kSchemaVersion;
  std::vector<std::string> command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, std::string>> notes;  // monotonicity flags, warnings
  std::vector<VerifierReport> results;
  std::vector<std::pair<std::string, double>> timings;  // serialized only on request

  const std::string* note(const std::string& key) const;
  std::size_t column(const std::string& name) const;  // throws when absent
  friend bool operator==(const Report&, const Report&) = default;
};

Cell measure_cell(const MeasureResult& m);

// Exact rationals as "p/q"; non-finite doubles as strings.
std::string report_to_json(const Report& r, bool with_timings = false);
Report report_from_json(const std::string& text);
std::string report_to_csv(const Report& r);
// Fixed-width summary of verifier results.
std::string summary_table(const std::vector<VerifierReport>& results);

// Line chart of every numeric column against the first; columns without numbers
// are skipped and named in `warnings`.
std::string emit_plot(const Report& r, std::vector<std::string>* warnings = nullptr,
                      const std::vector<std::string>& skip = {});

// One row per measure of a single set.
Report measure_report(const SetInput& s, const Gauge& g, const Config& cfg, const std::vector<std::string>& which);
// Rows k = 1..kmax of A(k); monotone_<m> notes ("true", "false", "undetermined")
// and the rate columns k*c and k*d when c and d are requested.
Report sequence_report(const SetInput& s, unsigned kmax, const std::vector<std::string>& measures, const Gauge& g,
                       const Config& cfg);

}  // namespace nonconvex
