#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tracedist/csv.hpp"

namespace tracedist::harness {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eed5eed5eedull;

enum class ExperimentKind {
  Predict,
  SamplePage,
  SampleCharge,
  Syk,
  Ising,
  CombinatoricsTable,
};

std::string to_string(ExperimentKind kind);
ExperimentKind experiment_kind_from_string(const std::string& name);

// Invalid configuration; carries the offending field for CLI diagnostics.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& reason)
      : std::runtime_error(field + ": " + reason), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::Predict;
  std::string model = "page";  // predict: page | q0 | qgen
  int n = 10;                  // qubits (predict/sampling) or spins (ising)
  int n_majorana = 14;
  int nb_min = -1;             // -1: kind-dependent default
  int nb_max = -1;
  int samples = 500;           // MC pairs per f-point
  int realizations = 50;       // SYK disorder realizations
  int states = 7;              // band-center eigenstates per spectrum
  int momentum = 0;            // Ising momentum sector
  double q = 0.0;              // charge measured from the spectral peak
  double gamma = 0.5;
  bool has_window = false;
  double window_lo = 0.0;
  double window_hi = 0.0;
  std::uint64_t seed = kDefaultSeed;
  int threads = 0;             // 0: hardware concurrency
  bool normalize_states = true;
  std::string table_kind = "even";  // combinatorics-table: narayana | even | kreweras
  std::string out;             // CSV path; empty writes to stdout

  // Parses a config document, rejecting unknown keys. Throws ConfigError.
  static ExperimentConfig from_json(const nlohmann::json& doc);
  static ExperimentConfig from_json_file(const std::string& path);

  void validate() const;  // throws ConfigError
  int nb_lo() const;      // resolved grid bounds
  int nb_hi() const;
};

// Runs the experiment and returns one row per grid point, sorted by
// (n, f, q). Deterministic for a fixed (config, seed) regardless of the
// worker count. CombinatoricsTable does not produce rows; use
// combinatorics_table().
std::vector<ResultRow> run(const ExperimentConfig& config);

// Aligned integer table (one row per k) for the counting families.
std::string combinatorics_table(int n, const std::string& kind);

}  // namespace tracedist::harness
