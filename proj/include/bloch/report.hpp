#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bloch/estimators.hpp"

namespace bloch {

struct RunConfig {
  int radial = 64;
  int angular = 256;
  int sup_grid = 8;
  int powers = 200;
  std::vector<double> levels{0.9, 0.99, 0.999, 0.9999};
  std::vector<double> tlevels{0.9, 0.99, 0.999};
  std::uint64_t seed = 42;
  std::string out_path;  // empty writes to stdout
  std::string format = "csv";
  double tol = 1e-8;

  EstimatorConfig estimator_config() const;
  std::string describe(const std::string& command) const;
};

struct ReportTable {
  std::string header_comment;  // '#'-prefixed configuration line
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> summary;  // '#'-prefixed summary lines
};

// Cell formatting: shortest round-trip-safe decimal, empty string for
// missing/vacuous values.
std::string format_cell(double v);

ReportTable run_norm(const std::vector<SymbolPair>& pairs, const RunConfig& config);
ReportTable run_essnorm(const std::vector<SymbolPair>& pairs, const RunConfig& config);
ReportTable run_classify(const std::vector<SymbolPair>& pairs, const RunConfig& config);
ReportTable run_audit(const std::vector<SymbolPair>& pairs, const RunConfig& config);
ReportTable run_nevanlinna(const std::vector<SymbolPair>& pairs, const RunConfig& config);
// Empty pair list runs the bundled corpus.
ReportTable run_sweep(const std::vector<SymbolPair>& pairs, const RunConfig& config);

std::string to_csv(const ReportTable& table);
std::string to_json_text(const ReportTable& table);

// Renders per config.format and writes to config.out_path (or stdout).
void write_report(const ReportTable& table, const RunConfig& config);

}  // namespace bloch
