#pragma once

#include "tracedist/predictions.hpp"
#include "tracedist/rng.hpp"
#include "tracedist/state.hpp"

namespace tracedist::quantum {

// D1(rho, sigma) = (1/2) sum_i |lambda_i| over the eigenvalues of the
// Hermitian difference rho - sigma.
double trace_distance(const DensityOperator& rho, const DensityOperator& sigma);

// D_n(rho, sigma) = 2^{-1/n} (sum_i |lambda_i|^n)^{1/n}; n = 1 is the trace
// distance.
double schatten_distance(const DensityOperator& rho, const DensityOperator& sigma,
                         int n);

// Signed moment tr (rho - sigma)^n = sum_i lambda_i^n.
double trace_power_moment(const DensityOperator& rho,
                          const DensityOperator& sigma, int n);

struct MomentEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  double std_dev = 0.0;
  int samples = 0;
};

// Monte Carlo estimate of <tr (rho_A - sigma_A)^n> over independent pairs of
// Page states drawn from the unnormalized Gaussian ensemble (the ensemble the
// combinatorial predictions average over).
MomentEstimate moment_estimator(int n, const pred::Bipartition& part,
                                int samples, RngStream& rng);

}  // namespace tracedist::quantum
