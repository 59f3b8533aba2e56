// Command-line driver for the trace-distance laboratory: closed-form
// predictions, Monte Carlo sampling of random-state ensembles, exact
// diagonalization of the SYK and Ising models, and the counting tables.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tracedist/csv.hpp"
#include "tracedist/harness.hpp"
#include "tracedist/predictions.hpp"

namespace {

using tracedist::harness::ConfigError;
using tracedist::harness::ExperimentConfig;
using tracedist::harness::ExperimentKind;

struct CliState {
  ExperimentConfig flags;      // values bound to CLI options
  std::string config_path;
  std::vector<double> window;
};

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << text;
}

// --config (when given) is the base document; flags that were explicitly
// passed override its fields.
ExperimentConfig resolve_config(const CLI::App* cmd, const CliState& state,
                                ExperimentKind kind) {
  ExperimentConfig config;
  if (!state.config_path.empty())
    config = ExperimentConfig::from_json_file(state.config_path);
  config.kind = kind;

  const auto passed = [&](const char* flag) {
    const CLI::Option* opt = cmd->get_option_no_throw(flag);
    return opt != nullptr && opt->count() > 0;
  };
  if (passed("--model")) config.model = state.flags.model;
  if (passed("--n")) config.n = state.flags.n;
  if (passed("--n-majorana")) config.n_majorana = state.flags.n_majorana;
  if (passed("--nb-min")) config.nb_min = state.flags.nb_min;
  if (passed("--nb-max")) config.nb_max = state.flags.nb_max;
  if (passed("--samples")) config.samples = state.flags.samples;
  if (passed("--realizations")) config.realizations = state.flags.realizations;
  if (passed("--states")) config.states = state.flags.states;
  if (passed("--k")) config.momentum = state.flags.momentum;
  if (passed("--q")) config.q = state.flags.q;
  if (passed("--gamma")) config.gamma = state.flags.gamma;
  if (passed("--seed")) config.seed = state.flags.seed;
  if (passed("--threads")) config.threads = state.flags.threads;
  if (passed("--kind")) config.table_kind = state.flags.table_kind;
  if (passed("--out")) config.out = state.flags.out;
  if (passed("--no-normalize")) config.normalize_states = false;
  if (passed("--window")) {
    if (state.window.size() != 2)
      throw ConfigError("window", "expected lo,hi");
    config.has_window = true;
    config.window_lo = state.window[0];
    config.window_hi = state.window[1];
  }
  config.validate();
  return config;
}

void add_common_flags(CLI::App* cmd, CliState& state) {
  cmd->add_option("--config", state.config_path,
                  "JSON config file; explicit flags override its fields");
  cmd->add_option("--out", state.flags.out, "output CSV path (default stdout)");
  cmd->add_option("--seed", state.flags.seed, "master RNG seed");
  cmd->add_option("--threads", state.flags.threads,
                  "worker threads (0 = hardware concurrency)");
}

void add_grid_flags(CLI::App* cmd, CliState& state) {
  cmd->add_option("--nb-min", state.flags.nb_min, "smallest traced-qubit count");
  cmd->add_option("--nb-max", state.flags.nb_max, "largest traced-qubit count");
}

void run_rows_command(const ExperimentConfig& config) {
  const auto rows = tracedist::harness::run(config);
  write_output(tracedist::harness::csv_string(rows), config.out);
}

// The predict subcommand prints its documented (f, D1, P_discrimination) view.
void run_predict_command(const ExperimentConfig& config) {
  const auto rows = tracedist::harness::run(config);
  std::string text = "f,d1,p_discrimination\n";
  for (const auto& row : rows) {
    text += tracedist::harness::format_double(row.f);
    text += ',';
    text += tracedist::harness::format_double(row.mean_d1);
    text += ',';
    text += tracedist::harness::format_double(
        tracedist::pred::discrimination_probability(row.mean_d1));
    text += '\n';
  }
  write_output(text, config.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tracedist: subsystem trace-distances of random quantum states"};
  app.require_subcommand(1);

  CliState state;

  CLI::App* predict = app.add_subcommand(
      "predict", "closed-form trace-distance curves (CSV: f, D1, P)");
  predict->add_option("--model", state.flags.model, "page | q0 | qgen")
      ->check(CLI::IsMember({"page", "q0", "qgen"}));
  predict->add_option("--n", state.flags.n, "total qubit count");
  predict->add_option("--q", state.flags.q, "charge offset from the peak (qgen)");
  predict->add_option("--gamma", state.flags.gamma, "charge spectral width");
  add_grid_flags(predict, state);

  CLI::App* sample = app.add_subcommand(
      "sample", "Monte Carlo sampling of the page/charge ensembles");
  std::string ensemble = "page";
  sample->add_option("--ensemble", ensemble, "page | charge")
      ->check(CLI::IsMember({"page", "charge"}));
  sample->add_option("--n", state.flags.n, "total qubit count");
  sample->add_option("--samples", state.flags.samples, "state pairs per f-point");
  sample->add_option("--q", state.flags.q, "charge offset from the peak");
  sample->add_option("--gamma", state.flags.gamma, "charge spectral width");
  sample->add_flag("--no-normalize", "keep raw Gaussian state norms");
  add_grid_flags(sample, state);

  CLI::App* syk = app.add_subcommand(
      "syk", "exact diagonalization of the SYK model (even parity sector)");
  syk->add_option("--n-majorana", state.flags.n_majorana, "Majorana count (even)");
  syk->add_option("--realizations", state.flags.realizations,
                  "disorder realizations");
  syk->add_option("--states", state.flags.states,
                  "band-center states per realization");
  syk->add_option("--window", state.window, "energy window lo,hi")
      ->expected(2)->delimiter(',');
  add_grid_flags(syk, state);

  CLI::App* ising = app.add_subcommand(
      "ising", "exact diagonalization of the chaotic Ising chain");
  ising->add_option("--n", state.flags.n, "spin count");
  ising->add_option("--k", state.flags.momentum, "momentum sector");
  ising->add_option("--states", state.flags.states, "band-center eigenstates");
  ising->add_option("--window", state.window, "energy window lo,hi")
      ->expected(2)->delimiter(',');
  add_grid_flags(ising, state);

  CLI::App* table = app.add_subcommand(
      "combinatorics-table", "counting tables for non-crossing permutations");
  table->add_option("--n", state.flags.n, "element count (even)");
  table->add_option("--kind", state.flags.table_kind,
                    "narayana | even | kreweras")
      ->check(CLI::IsMember({"narayana", "even", "kreweras"}));

  for (CLI::App* cmd : {predict, sample, syk, ising, table})
    add_common_flags(cmd, state);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (predict->parsed()) {
      run_predict_command(resolve_config(predict, state, ExperimentKind::Predict));
    } else if (sample->parsed()) {
      const ExperimentKind kind = ensemble == "charge"
                                      ? ExperimentKind::SampleCharge
                                      : ExperimentKind::SamplePage;
      run_rows_command(resolve_config(sample, state, kind));
    } else if (syk->parsed()) {
      run_rows_command(resolve_config(syk, state, ExperimentKind::Syk));
    } else if (ising->parsed()) {
      run_rows_command(resolve_config(ising, state, ExperimentKind::Ising));
    } else if (table->parsed()) {
      const ExperimentConfig config =
          resolve_config(table, state, ExperimentKind::CombinatoricsTable);
      write_output(
          tracedist::harness::combinatorics_table(config.n, config.table_kind),
          config.out);
    }
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
