#include "tracedist/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "tracedist/combinatorics.hpp"
#include "tracedist/distance.hpp"
#include "tracedist/eigenstate_analysis.hpp"
#include "tracedist/ising.hpp"
#include "tracedist/predictions.hpp"
#include "tracedist/sampling.hpp"
#include "tracedist/syk.hpp"

namespace tracedist::harness {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int resolved_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(0..n_tasks-1) on a fixed-size pool. Task pickup order is arbitrary;
// callers must make results independent of it (one output slot per task).
void parallel_tasks(int n_tasks, int threads, const std::function<void(int)>& fn) {
  const int workers = std::max(1, std::min(threads, n_tasks));
  if (workers == 1) {
    for (int t = 0; t < n_tasks; ++t) fn(t);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const int t = next.fetch_add(1);
        if (t >= n_tasks) return;
        try {
          fn(t);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

struct Accumulator {
  double sum = 0.0;
  double sum_sq = 0.0;
  long count = 0;
  double seconds = 0.0;

  void merge(const Accumulator& other) {
    sum += other.sum;
    sum_sq += other.sum_sq;
    count += other.count;
    seconds += other.seconds;
  }
  double mean() const { return sum / static_cast<double>(count); }
  double std_dev() const {
    if (count < 2) return 0.0;
    const double m = mean();
    const double var =
        (sum_sq - static_cast<double>(count) * m * m) / static_cast<double>(count - 1);
    return std::sqrt(std::max(var, 0.0));
  }
  double std_error() const {
    return count > 0 ? std_dev() / std::sqrt(static_cast<double>(count)) : 0.0;
  }
};

std::optional<double> analytic_page_for(int n, int nb) {
  return pred::page_trace_distance(pred::Bipartition(n, nb));
}

std::optional<double> analytic_q0_for(int n, int nb) {
  if (nb == 0 || nb == n) return std::nullopt;
  return pred::charge_q0_trace_distance(pred::Bipartition(n, nb));
}

std::vector<ResultRow> run_predict(const ExperimentConfig& config) {
  std::vector<ResultRow> rows;
  for (int nb = config.nb_lo(); nb <= config.nb_hi(); ++nb) {
    const auto start = Clock::now();
    const pred::Bipartition part(config.n, nb);
    ResultRow row;
    row.experiment = to_string(config.kind) + ":" + config.model;
    row.n = config.n;
    row.n_b = nb;
    row.f = part.f();
    row.samples = 0;
    row.analytic_page = analytic_page_for(config.n, nb);
    row.analytic_q0 = analytic_q0_for(config.n, nb);
    if (config.model == "page") {
      row.mean_d1 = *row.analytic_page;
    } else if (config.model == "q0") {
      row.mean_d1 = *row.analytic_q0;
    } else {  // qgen
      row.q = config.q;
      row.mean_d1 = pred::charge_general_trace_distance(
          part, pred::ChargeModel{config.gamma, config.q});
    }
    row.wall_time_s = seconds_since(start);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ResultRow> run_sampling(const ExperimentConfig& config) {
  const bool charge = config.kind == ExperimentKind::SampleCharge;
  const int n = config.n;
  const int nb_lo = config.nb_lo();
  const int nb_hi = config.nb_hi();
  const int n_points = nb_hi - nb_lo + 1;

  quantum::ChargeAssignment assignment;
  int sector_charge = 0;
  if (charge) {
    assignment = quantum::ChargeAssignment::hamming(n);
    // config.q is measured from the spectral peak at Hamming weight n/2.
    const double weight = config.q + 0.5 * n;
    sector_charge = static_cast<int>(std::lround(weight));
    if (std::abs(weight - sector_charge) > 1e-9)
      throw ConfigError("q", "q + n/2 must be an integer Hamming weight");
    if (assignment.sector_dimension(sector_charge) == 0)
      throw ConfigError("q", "empty charge sector");
  }

  constexpr int kChunk = 50;
  const int chunks_per_point = (config.samples + kChunk - 1) / kChunk;
  const int n_tasks = n_points * chunks_per_point;
  std::vector<Accumulator> task_results(static_cast<std::size_t>(n_tasks));

  parallel_tasks(n_tasks, resolved_threads(config.threads), [&](int task) {
    const auto start = Clock::now();
    const int point = task / chunks_per_point;
    const int chunk = task % chunks_per_point;
    const int nb = nb_lo + point;
    const int na = n - nb;
    const int pairs =
        std::min(kChunk, config.samples - chunk * kChunk);
    RngStream rng(config.seed, static_cast<std::uint64_t>(task));
    Accumulator acc;
    for (int p = 0; p < pairs; ++p) {
      quantum::PureState psi =
          charge ? quantum::sample_charge_eigenstate(n, assignment, sector_charge, rng)
                 : quantum::sample_page_state(n, rng);
      quantum::PureState phi =
          charge ? quantum::sample_charge_eigenstate(n, assignment, sector_charge, rng)
                 : quantum::sample_page_state(n, rng);
      if (config.normalize_states) {
        psi = psi.normalized();
        phi = phi.normalized();
      }
      // n_a = 0 traces everything: the reduced operators are the scalars
      // |psi|^2 and |phi|^2 (exactly 0 distance for normalized states).
      const double d =
          na == 0 ? 0.5 * std::abs(psi.amplitudes.squaredNorm() -
                                   phi.amplitudes.squaredNorm())
                  : quantum::trace_distance(
                        quantum::reduced_density_matrix(psi, na),
                        quantum::reduced_density_matrix(phi, na));
      acc.sum += d;
      acc.sum_sq += d * d;
      ++acc.count;
    }
    acc.seconds = seconds_since(start);
    task_results[static_cast<std::size_t>(task)] = acc;
  });

  std::vector<ResultRow> rows;
  for (int point = 0; point < n_points; ++point) {
    Accumulator total;
    for (int chunk = 0; chunk < chunks_per_point; ++chunk)
      total.merge(task_results[static_cast<std::size_t>(point * chunks_per_point + chunk)]);
    const int nb = nb_lo + point;
    ResultRow row;
    row.experiment = to_string(config.kind);
    row.n = n;
    row.n_b = nb;
    row.f = static_cast<double>(nb) / n;
    if (charge) row.q = config.q;
    row.samples = total.count;
    row.mean_d1 = total.mean();
    row.std_error = total.std_error();
    row.std_dev = total.std_dev();
    row.analytic_page = analytic_page_for(n, nb);
    row.analytic_q0 = analytic_q0_for(n, nb);
    row.wall_time_s = total.seconds;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ResultRow> run_syk(const ExperimentConfig& config) {
  const int n_eff = config.n_majorana / 2 - 1;  // qubits of the even sector
  const int nb_lo = config.nb_lo();
  const int nb_hi = config.nb_hi();
  const int n_points = nb_hi - nb_lo + 1;

  models::EnergyWindow window;
  if (config.has_window) window = {config.window_lo, config.window_hi};

  std::vector<std::vector<Accumulator>> per_realization(
      static_cast<std::size_t>(config.realizations),
      std::vector<Accumulator>(static_cast<std::size_t>(n_points)));

  parallel_tasks(config.realizations, resolved_threads(config.threads), [&](int r) {
    const auto start = Clock::now();
    models::SykSpec spec{config.n_majorana, config.seed,
                         static_cast<std::uint64_t>(r)};
    const Eigen::MatrixXcd h = models::build_syk_hamiltonian(spec);
    const Eigen::MatrixXcd sector = models::even_parity_sector(h);
    const models::BlockEigenstates band =
        models::band_center_eigenstates(sector, window, config.states);
    std::vector<quantum::PureState> states;
    states.reserve(band.vectors.size());
    for (const auto& v : band.vectors) states.push_back({v, n_eff});
    std::vector<int> grid(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) grid[static_cast<std::size_t>(i)] = nb_lo + i;
    const auto pair_rows = models::eigenstate_pair_distances(states, grid);
    double elapsed = seconds_since(start);
    for (int i = 0; i < n_points; ++i) {
      Accumulator& acc = per_realization[static_cast<std::size_t>(r)]
                                        [static_cast<std::size_t>(i)];
      const auto& pr = pair_rows[static_cast<std::size_t>(i)];
      acc.count = pr.pairs;
      acc.sum = pr.mean * pr.pairs;
      acc.sum_sq = (pr.pairs - 1) * pr.std_dev * pr.std_dev +
                   pr.pairs * pr.mean * pr.mean;
      acc.seconds = elapsed / n_points;
    }
  });

  std::vector<ResultRow> rows;
  for (int i = 0; i < n_points; ++i) {
    Accumulator total;
    for (int r = 0; r < config.realizations; ++r)
      total.merge(per_realization[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)]);
    const int nb = nb_lo + i;
    ResultRow row;
    row.experiment = to_string(ExperimentKind::Syk);
    row.n = n_eff;
    row.n_b = nb;
    row.f = static_cast<double>(nb) / n_eff;
    row.samples = total.count;
    row.mean_d1 = total.mean();
    row.std_error = total.std_error();
    row.std_dev = total.std_dev();
    row.analytic_page = analytic_page_for(n_eff, nb);
    row.analytic_q0 = analytic_q0_for(n_eff, nb);
    row.wall_time_s = total.seconds;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ResultRow> run_ising(const ExperimentConfig& config) {
  const auto start = Clock::now();
  const int n = config.n;
  models::IsingSpec spec{n};
  const Eigen::MatrixXd h = models::build_ising_hamiltonian(spec);
  const auto sectors = models::momentum_sectors(n);
  const models::MomentumSector& sector =
      sectors[static_cast<std::size_t>(config.momentum)];

  models::EnergyWindow window;
  if (config.has_window) window = {config.window_lo, config.window_hi};
  const models::BlockEigenstates band = models::band_center_eigenstates(
      sector.project(h), window, config.states);

  std::vector<quantum::PureState> states;
  states.reserve(band.vectors.size());
  for (const auto& v : band.vectors) states.push_back(sector.lift(v));

  std::vector<int> grid;
  for (int nb = config.nb_lo(); nb <= config.nb_hi(); ++nb) grid.push_back(nb);
  const auto pair_rows = models::eigenstate_pair_distances(states, grid);
  const double elapsed = seconds_since(start);

  std::vector<ResultRow> rows;
  for (const auto& pr : pair_rows) {
    ResultRow row;
    row.experiment = to_string(ExperimentKind::Ising);
    row.n = n;
    row.n_b = pr.n_b;
    row.f = pr.f;
    row.samples = pr.pairs;
    row.mean_d1 = pr.mean;
    row.std_error = pr.std_error;
    row.std_dev = pr.std_dev;
    row.analytic_page = analytic_page_for(n, pr.n_b);
    row.analytic_q0 = analytic_q0_for(n, pr.n_b);
    row.wall_time_s = elapsed / static_cast<double>(pair_rows.size());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Predict: return "predict";
    case ExperimentKind::SamplePage: return "sample-page";
    case ExperimentKind::SampleCharge: return "sample-charge";
    case ExperimentKind::Syk: return "syk";
    case ExperimentKind::Ising: return "ising";
    case ExperimentKind::CombinatoricsTable: return "combinatorics-table";
  }
  throw std::logic_error("to_string: bad ExperimentKind");
}

ExperimentKind experiment_kind_from_string(const std::string& name) {
  if (name == "predict") return ExperimentKind::Predict;
  if (name == "sample-page") return ExperimentKind::SamplePage;
  if (name == "sample-charge") return ExperimentKind::SampleCharge;
  if (name == "syk") return ExperimentKind::Syk;
  if (name == "ising") return ExperimentKind::Ising;
  if (name == "combinatorics-table") return ExperimentKind::CombinatoricsTable;
  throw ConfigError("experiment", "unknown experiment kind '" + name + "'");
}

int ExperimentConfig::nb_lo() const {
  if (nb_min >= 0) return nb_min;
  return 1;
}

int ExperimentConfig::nb_hi() const {
  if (nb_max >= 0) return nb_max;
  const int total = kind == ExperimentKind::Syk ? n_majorana / 2 - 1 : n;
  return total - 1;
}

void ExperimentConfig::validate() const {
  const auto require = [](bool ok, const char* field, const char* reason) {
    if (!ok) throw ConfigError(field, reason);
  };
  switch (kind) {
    case ExperimentKind::Predict:
      require(model == "page" || model == "q0" || model == "qgen", "model",
              "must be page, q0 or qgen");
      require(n >= 1, "n", "must be >= 1");
      break;
    case ExperimentKind::SamplePage:
    case ExperimentKind::SampleCharge:
      require(n >= 1 && n <= quantum::kMaxSampledQubits, "n",
              "outside 1..24");
      require(samples >= 2, "samples", "must be >= 2");
      break;
    case ExperimentKind::Syk:
      require(n_majorana >= 6 && n_majorana % 2 == 0 &&
                  n_majorana <= models::kMaxMajoranas,
              "n_majorana", "must be even, 6..28");
      require(realizations >= 1, "realizations", "must be >= 1");
      require(states >= 2, "states", "must be >= 2");
      break;
    case ExperimentKind::Ising:
      require(n >= 2 && n <= models::kMaxIsingSpins, "n", "outside 2..14");
      require(momentum >= 0 && momentum < n, "momentum", "outside 0..n-1");
      require(states >= 2, "states", "must be >= 2");
      break;
    case ExperimentKind::CombinatoricsTable:
      require(n >= 2 && n % 2 == 0, "n", "must be even and >= 2");
      require(table_kind == "narayana" || table_kind == "even" ||
                  table_kind == "kreweras",
              "kind", "must be narayana, even or kreweras");
      return;
  }
  const int total = kind == ExperimentKind::Syk ? n_majorana / 2 - 1 : n;
  if (nb_lo() > nb_hi()) throw ConfigError("nb", "empty f-grid");
  if (nb_lo() < 0 || nb_hi() > total)
    throw ConfigError("nb", "grid outside 0..n");
  const bool needs_interior =
      (kind == ExperimentKind::Predict && model != "page") ||
      kind == ExperimentKind::Syk || kind == ExperimentKind::Ising;
  if (needs_interior && (nb_lo() < 1 || nb_hi() > total - 1))
    throw ConfigError("nb", "grid must stay within 1..n-1 for this model");
  if (gamma <= 0.0) throw ConfigError("gamma", "must be > 0");
  if (threads < 0) throw ConfigError("threads", "must be >= 0");
  if (has_window && !(window_lo < window_hi))
    throw ConfigError("window", "needs lo < hi");
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("config", "document must be an object");
  ExperimentConfig config;
  bool saw_kind = false;
  for (const auto& [key, value] : doc.items()) {
    try {
      if (key == "experiment") {
        config.kind = experiment_kind_from_string(value.get<std::string>());
        saw_kind = true;
      } else if (key == "model") {
        config.model = value.get<std::string>();
      } else if (key == "n") {
        config.n = value.get<int>();
      } else if (key == "n_majorana") {
        config.n_majorana = value.get<int>();
      } else if (key == "nb_min") {
        config.nb_min = value.get<int>();
      } else if (key == "nb_max") {
        config.nb_max = value.get<int>();
      } else if (key == "samples") {
        config.samples = value.get<int>();
      } else if (key == "realizations") {
        config.realizations = value.get<int>();
      } else if (key == "states") {
        config.states = value.get<int>();
      } else if (key == "momentum") {
        config.momentum = value.get<int>();
      } else if (key == "q") {
        config.q = value.get<double>();
      } else if (key == "gamma") {
        config.gamma = value.get<double>();
      } else if (key == "window") {
        const auto w = value.get<std::vector<double>>();
        if (w.size() != 2) throw ConfigError("window", "expected [lo, hi]");
        config.has_window = true;
        config.window_lo = w[0];
        config.window_hi = w[1];
      } else if (key == "seed") {
        config.seed = value.get<std::uint64_t>();
      } else if (key == "threads") {
        config.threads = value.get<int>();
      } else if (key == "normalize_states") {
        config.normalize_states = value.get<bool>();
      } else if (key == "kind") {
        config.table_kind = value.get<std::string>();
      } else if (key == "out") {
        config.out = value.get<std::string>();
      } else {
        throw ConfigError(key, "unknown configuration key");
      }
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(key, std::string("bad value (") + e.what() + ")");
    }
  }
  if (!saw_kind) throw ConfigError("experiment", "missing experiment kind");
  config.validate();
  return config;
}

ExperimentConfig ExperimentConfig::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config", std::string("JSON parse error: ") + e.what());
  }
  return from_json(doc);
}

std::vector<ResultRow> run(const ExperimentConfig& config) {
  config.validate();
  std::vector<ResultRow> rows;
  switch (config.kind) {
    case ExperimentKind::Predict:
      rows = run_predict(config);
      break;
    case ExperimentKind::SamplePage:
    case ExperimentKind::SampleCharge:
      rows = run_sampling(config);
      break;
    case ExperimentKind::Syk:
      rows = run_syk(config);
      break;
    case ExperimentKind::Ising:
      rows = run_ising(config);
      break;
    case ExperimentKind::CombinatoricsTable:
      throw ConfigError("experiment",
                        "combinatorics-table emits a table, not result rows");
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ResultRow& a, const ResultRow& b) {
                     if (a.n != b.n) return a.n < b.n;
                     if (a.f != b.f) return a.f < b.f;
                     return a.q.value_or(0.0) < b.q.value_or(0.0);
                   });
  return rows;
}

std::string combinatorics_table(int n, const std::string& kind) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("combinatorics_table: n must be even and >= 2");

  std::vector<std::vector<std::string>> cells;
  if (kind == "narayana") {
    cells.push_back({"k", "narayana(n,k)"});
    for (int k = 1; k <= n; ++k)
      cells.push_back({std::to_string(k), comb::narayana(n, k).str()});
  } else if (kind == "even") {
    cells.push_back({"k", "even_narayana(n,k)"});
    for (int k = 1; k <= n / 2; ++k)
      cells.push_back({std::to_string(k), comb::even_narayana(n, k).str()});
  } else if (kind == "kreweras") {
    cells.push_back({"k", "cycle_type", "kreweras"});
    for (const auto& part : comb::all_cycle_types(n)) {
      std::ostringstream type;
      type << "(";
      bool first = true;
      for (int i = 1; i <= n; ++i) {
        if (part.multiplicity[i - 1] == 0) continue;
        if (!first) type << ",";
        type << i << "^" << part.multiplicity[i - 1];
        first = false;
      }
      type << ")";
      cells.push_back({std::to_string(part.cycle_count()), type.str(),
                       comb::kreweras(part).str()});
    }
  } else {
    throw std::invalid_argument("combinatorics_table: unknown kind " + kind);
  }

  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace tracedist::harness
