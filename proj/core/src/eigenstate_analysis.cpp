#include "tracedist/eigenstate_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "tracedist/distance.hpp"

namespace tracedist::models {

DosFit gaussian_dos_fit(const std::vector<double>& eigenvalues) {
  if (eigenvalues.size() < 10)
    throw std::invalid_argument("gaussian_dos_fit: needs >= 10 eigenvalues");
  const double n = static_cast<double>(eigenvalues.size());
  const double mean =
      std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0) / n;
  double ss = 0.0;
  for (const double e : eigenvalues) ss += (e - mean) * (e - mean);
  const double width = std::sqrt(ss / (n - 1.0));
  if (!(width > 0.0) || width < 1e-12 * (std::abs(mean) + 1.0))
    throw std::invalid_argument("gaussian_dos_fit: degenerate spectrum");
  return {mean, width};
}

BlockEigenstates band_center_eigenstates(const Eigen::MatrixXcd& h_block,
                                         const EnergyWindow& window, int count) {
  if (count < 1)
    throw std::invalid_argument("band_center_eigenstates: count must be >= 1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h_block);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("band_center_eigenstates: eigensolver failed");

  const Eigen::VectorXd& evals = solver.eigenvalues();
  std::vector<double> all(evals.data(), evals.data() + evals.size());
  const DosFit fit = gaussian_dos_fit(all);

  std::vector<long> in_window;
  for (long i = 0; i < evals.size(); ++i)
    if (window.contains(evals[i])) in_window.push_back(i);
  if (in_window.empty())
    throw std::runtime_error("band_center_eigenstates: empty energy window");

  std::stable_sort(in_window.begin(), in_window.end(), [&](long a, long b) {
    return std::abs(evals[a] - fit.mean) < std::abs(evals[b] - fit.mean);
  });
  if (static_cast<std::size_t>(count) < in_window.size())
    in_window.resize(static_cast<std::size_t>(count));

  BlockEigenstates out;
  out.fit = fit;
  for (const long i : in_window) {
    out.vectors.push_back(solver.eigenvectors().col(i));
    out.energies.push_back(evals[i]);
  }
  return out;
}

std::vector<PairDistanceRow> eigenstate_pair_distances(
    const std::vector<quantum::PureState>& states,
    const std::vector<int>& nb_grid) {
  if (states.size() < 2)
    throw std::invalid_argument("eigenstate_pair_distances: needs >= 2 states");
  const int n_qubits = states.front().n_qubits;
  for (const auto& s : states)
    if (s.n_qubits != n_qubits)
      throw std::invalid_argument("eigenstate_pair_distances: mixed qubit counts");

  std::vector<PairDistanceRow> rows;
  for (const int nb : nb_grid) {
    const int na = n_qubits - nb;
    if (na < 1 || nb < 0)
      throw std::invalid_argument("eigenstate_pair_distances: bad n_b entry");
    PairDistanceRow row;
    row.n_b = nb;
    row.f = static_cast<double>(nb) / n_qubits;
    double sum = 0.0, sum_sq = 0.0;
    int pairs = 0;
    std::vector<quantum::DensityOperator> reduced;
    reduced.reserve(states.size());
    for (const auto& s : states)
      reduced.push_back(quantum::reduced_density_matrix(s.normalized(), na));
    for (std::size_t i = 0; i < reduced.size(); ++i)
      for (std::size_t j = i + 1; j < reduced.size(); ++j) {
        const double d = quantum::trace_distance(reduced[i], reduced[j]);
        sum += d;
        sum_sq += d * d;
        ++pairs;
      }
    row.pairs = pairs;
    row.mean = sum / pairs;
    if (pairs > 1) {
      const double var = (sum_sq - pairs * row.mean * row.mean) / (pairs - 1);
      row.std_dev = std::sqrt(std::max(var, 0.0));
      row.std_error = row.std_dev / std::sqrt(static_cast<double>(pairs));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace tracedist::models
