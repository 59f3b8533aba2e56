#pragma once

#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "tracedist/state.hpp"

namespace tracedist::models {

struct DosFit {
  double mean = 0.0;
  double width = 0.0;
};

// Maximum-likelihood Gaussian fit (sample mean, sample standard deviation).
// Requires >= 10 eigenvalues and a non-degenerate spread.
DosFit gaussian_dos_fit(const std::vector<double>& eigenvalues);

struct EnergyWindow {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double e) const { return e > lo && e < hi; }
};

// Eigenvectors of a Hermitian block with eigenvalues inside the window,
// ordered by distance from the fitted density-of-states peak (closest first),
// truncated to count.
struct BlockEigenstates {
  std::vector<Eigen::VectorXcd> vectors;
  std::vector<double> energies;
  DosFit fit;
};

BlockEigenstates band_center_eigenstates(const Eigen::MatrixXcd& h_block,
                                         const EnergyWindow& window, int count);

// Mean/stddev/stderr of the subsystem trace-distance over all unordered pairs
// of the supplied (normalized) states, one row per traced-qubit count.
struct PairDistanceRow {
  int n_b = 0;
  double f = 0.0;
  double mean = 0.0;
  double std_dev = 0.0;
  double std_error = 0.0;
  int pairs = 0;
};

std::vector<PairDistanceRow> eigenstate_pair_distances(
    const std::vector<quantum::PureState>& states, const std::vector<int>& nb_grid);

}  // namespace tracedist::models
