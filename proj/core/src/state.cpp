#include "tracedist/state.hpp"

#include <stdexcept>

namespace tracedist::quantum {

PureState PureState::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::runtime_error("PureState: cannot normalize null vector");
  return {amplitudes / n, n_qubits};
}

DensityOperator reduced_density_matrix(const PureState& state, int n_a,
                                       bool normalize_trace) {
  if (n_a < 1 || n_a > state.n_qubits)
    throw std::invalid_argument("reduced_density_matrix: n_a outside 1..n_qubits");
  if (state.dim() != (1L << state.n_qubits))
    throw std::invalid_argument("reduced_density_matrix: amplitude count != 2^n_qubits");

  const long da = 1L << n_a;
  const long db = 1L << (state.n_qubits - n_a);
  // Row-major view: row index = subsystem A (leading bits), column = B.
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      m(state.amplitudes.data(), da, db);
  DensityOperator rho{m * m.adjoint()};
  if (normalize_trace) {
    const double tr = rho.trace_real();
    if (tr == 0.0)
      throw std::runtime_error("reduced_density_matrix: zero trace");
    rho.matrix /= tr;
  }
  return rho;
}

}  // namespace tracedist::quantum
