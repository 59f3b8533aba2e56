#pragma once

#include <complex>

#include <Eigen/Dense>

namespace tracedist::quantum {

using Complex = std::complex<double>;

// Pure state of n_qubits qubits. Basis-index convention used project-wide:
// qubit 0 is the most significant bit of the index, and a bipartition keeps
// the leading n_a qubits in subsystem A, so index = a * 2^{n_b} + b.
struct PureState {
  Eigen::VectorXcd amplitudes;
  int n_qubits = 0;

  long dim() const { return amplitudes.size(); }
  double norm() const { return amplitudes.norm(); }
  PureState normalized() const;
};

struct DensityOperator {
  Eigen::MatrixXcd matrix;

  long dim() const { return matrix.rows(); }
  double trace_real() const { return matrix.trace().real(); }
};

// rho_A[a, a'] = sum_b psi[a b] conj(psi[a' b]) over the trailing n_b qubits.
// With normalize_trace the result is divided by tr rho_A.
DensityOperator reduced_density_matrix(const PureState& state, int n_a,
                                       bool normalize_trace = false);

}  // namespace tracedist::quantum
