#include "tracedist/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tracedist::harness {

namespace {

std::string optional_cell(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

std::vector<std::string> split_record(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

std::optional<double> parse_optional(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::stod(s);
}

}  // namespace

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void emit_csv(const std::vector<ResultRow>& rows, std::ostream& os,
              CsvOptions options) {
  os << "experiment,n,n_b,f,q,samples,mean_d1,stderr,stddev,analytic_page,"
        "analytic_q0";
  if (options.include_timing) os << ",wall_time_s";
  os << "\n";
  for (const ResultRow& r : rows) {
    os << csv_escape(r.experiment) << ',' << r.n << ',' << r.n_b << ','
       << format_double(r.f) << ',' << optional_cell(r.q) << ',' << r.samples
       << ',' << format_double(r.mean_d1) << ',' << format_double(r.std_error)
       << ',' << format_double(r.std_dev) << ','
       << optional_cell(r.analytic_page) << ',' << optional_cell(r.analytic_q0);
    if (options.include_timing) os << ',' << format_double(r.wall_time_s);
    os << "\n";
  }
}

void emit_csv(const std::vector<ResultRow>& rows, const std::string& path,
              CsvOptions options) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("emit_csv: cannot open " + path);
  emit_csv(rows, out, options);
  if (!out) throw std::runtime_error("emit_csv: write failed for " + path);
}

std::string csv_string(const std::vector<ResultRow>& rows, CsvOptions options) {
  std::ostringstream os;
  emit_csv(rows, os, options);
  return os.str();
}

std::vector<ResultRow> parse_csv(std::istream& is) {
  std::vector<ResultRow> rows;
  std::string line;
  if (!std::getline(is, line)) return rows;  // empty input: no header, no rows
  const bool has_timing = line.find("wall_time_s") != std::string::npos;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split_record(line);
    const std::size_t expected = has_timing ? 12u : 11u;
    if (f.size() != expected)
      throw std::runtime_error("parse_csv: malformed record: " + line);
    ResultRow r;
    r.experiment = f[0];
    r.n = std::stoi(f[1]);
    r.n_b = std::stoi(f[2]);
    r.f = std::stod(f[3]);
    r.q = parse_optional(f[4]);
    r.samples = std::stol(f[5]);
    r.mean_d1 = std::stod(f[6]);
    r.std_error = std::stod(f[7]);
    r.std_dev = std::stod(f[8]);
    r.analytic_page = parse_optional(f[9]);
    r.analytic_q0 = parse_optional(f[10]);
    if (has_timing) r.wall_time_s = std::stod(f[11]);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace tracedist::harness
