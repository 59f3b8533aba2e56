#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tracedist::harness {

// One output record of an experiment run. Optional fields render as empty
// CSV cells. All floats are written with 12 significant digits.
struct ResultRow {
  std::string experiment;
  int n = 0;
  int n_b = 0;
  double f = 0.0;
  std::optional<double> q;
  long samples = 0;
  double mean_d1 = 0.0;
  double std_error = 0.0;
  double std_dev = 0.0;
  std::optional<double> analytic_page;
  std::optional<double> analytic_q0;
  double wall_time_s = 0.0;
};

struct CsvOptions {
  // Wall-time telemetry is the one column that cannot be reproducible, so
  // byte-level comparisons of repeated runs suppress it.
  bool include_timing = true;
};

void emit_csv(const std::vector<ResultRow>& rows, std::ostream& os,
              CsvOptions options = {});
void emit_csv(const std::vector<ResultRow>& rows, const std::string& path,
              CsvOptions options = {});
std::string csv_string(const std::vector<ResultRow>& rows, CsvOptions options = {});

std::vector<ResultRow> parse_csv(std::istream& is);

// RFC 4180 quoting for a single field.
std::string csv_escape(const std::string& field);
// 12-significant-digit float rendering used for every numeric cell.
std::string format_double(double v);

}  // namespace tracedist::harness
