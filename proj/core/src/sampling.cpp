#include "tracedist/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace tracedist::quantum {

namespace {

void check_size(int n_qubits, int max_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("sampler: n_qubits must be >= 1");
  if (n_qubits > max_qubits)
    throw std::length_error("sampler: n_qubits exceeds memory guard");
}

}  // namespace

ChargeAssignment ChargeAssignment::hamming(int n_qubits) {
  if (n_qubits < 1)
    throw std::invalid_argument("ChargeAssignment: n_qubits must be >= 1");
  return {std::vector<int>(static_cast<std::size_t>(n_qubits), 1)};
}

int ChargeAssignment::total_charge(std::uint64_t basis_index) const {
  const int n = n_qubits();
  int q = 0;
  for (int i = 0; i < n; ++i)
    if (basis_index & (1ull << (n - 1 - i))) q += site_charge[i];
  return q;
}

std::vector<std::uint64_t> ChargeAssignment::sector_states(int q) const {
  std::vector<std::uint64_t> out;
  const std::uint64_t dim = 1ull << n_qubits();
  for (std::uint64_t b = 0; b < dim; ++b)
    if (total_charge(b) == q) out.push_back(b);
  return out;
}

long ChargeAssignment::sector_dimension(int q) const {
  return static_cast<long>(sector_states(q).size());
}

PureState sample_page_state(int n_qubits, RngStream& rng, int max_qubits) {
  check_size(n_qubits, max_qubits);
  const long dim = 1L << n_qubits;
  const double sigma = std::sqrt(0.5 / static_cast<double>(dim));
  PureState state{Eigen::VectorXcd(dim), n_qubits};
  for (long i = 0; i < dim; ++i)
    state.amplitudes[i] = Complex(sigma * rng.normal(), sigma * rng.normal());
  return state;
}

PureState sample_charge_eigenstate(int n_qubits, const ChargeAssignment& ca,
                                   int q_total, RngStream& rng, int max_qubits) {
  check_size(n_qubits, max_qubits);
  if (ca.n_qubits() != n_qubits)
    throw std::invalid_argument("sample_charge_eigenstate: assignment size mismatch");
  const std::vector<std::uint64_t> sector = ca.sector_states(q_total);
  if (sector.empty())
    throw std::domain_error("sample_charge_eigenstate: empty charge sector");
  const double sigma = std::sqrt(0.5 / static_cast<double>(sector.size()));
  PureState state{Eigen::VectorXcd::Zero(1L << n_qubits), n_qubits};
  for (const std::uint64_t b : sector)
    state.amplitudes[static_cast<long>(b)] =
        Complex(sigma * rng.normal(), sigma * rng.normal());
  return state;
}

}  // namespace tracedist::quantum
