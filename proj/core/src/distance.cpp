#include "tracedist/distance.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "tracedist/sampling.hpp"

namespace tracedist::quantum {

namespace {

Eigen::VectorXd difference_eigenvalues(const DensityOperator& rho,
                                       const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim())
    throw std::invalid_argument("distance: density operator dimensions differ");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      rho.matrix - sigma.matrix, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

}  // namespace

double trace_distance(const DensityOperator& rho, const DensityOperator& sigma) {
  return 0.5 * difference_eigenvalues(rho, sigma).cwiseAbs().sum();
}

double schatten_distance(const DensityOperator& rho, const DensityOperator& sigma,
                         int n) {
  if (n < 1) throw std::invalid_argument("schatten_distance: n must be >= 1");
  const Eigen::VectorXd ev = difference_eigenvalues(rho, sigma);
  double sum = 0.0;
  for (long i = 0; i < ev.size(); ++i)
    sum += std::pow(std::abs(ev[i]), static_cast<double>(n));
  return std::exp2(-1.0 / n) * std::pow(sum, 1.0 / n);
}

double trace_power_moment(const DensityOperator& rho,
                          const DensityOperator& sigma, int n) {
  if (n < 1) throw std::invalid_argument("trace_power_moment: n must be >= 1");
  const Eigen::VectorXd ev = difference_eigenvalues(rho, sigma);
  double sum = 0.0;
  for (long i = 0; i < ev.size(); ++i)
    sum += std::pow(ev[i], static_cast<double>(n));
  return sum;
}

MomentEstimate moment_estimator(int n, const pred::Bipartition& part,
                                int samples, RngStream& rng) {
  if (samples < 2)
    throw std::invalid_argument("moment_estimator: needs samples >= 2");
  double sum = 0.0, sum_sq = 0.0;
  for (int s = 0; s < samples; ++s) {
    const PureState psi = sample_page_state(part.n_total, rng);
    const PureState phi = sample_page_state(part.n_total, rng);
    const DensityOperator rho = reduced_density_matrix(psi, part.n_a());
    const DensityOperator sigma = reduced_density_matrix(phi, part.n_a());
    const double value = trace_power_moment(rho, sigma, n);
    sum += value;
    sum_sq += value * value;
  }
  MomentEstimate est;
  est.samples = samples;
  est.mean = sum / samples;
  const double var = (sum_sq - samples * est.mean * est.mean) / (samples - 1);
  est.std_dev = std::sqrt(std::max(var, 0.0));
  est.std_error = est.std_dev / std::sqrt(static_cast<double>(samples));
  return est;
}

}  // namespace tracedist::quantum
