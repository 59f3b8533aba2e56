#pragma once

#include <cstdint>
#include <vector>

#include "tracedist/rng.hpp"
#include "tracedist/state.hpp"

namespace tracedist::quantum {

// Default memory guard for state samplers (2^24 complex amplitudes = 256 MiB).
inline constexpr int kMaxSampledQubits = 24;

// Subsystem-additive scalar charge: every qubit carries an integer charge and
// the charge of a basis state is the sum over set qubits, so
// Q(a, b) = Q_A(a) + Q_B(b) for any leading/trailing split.
struct ChargeAssignment {
  std::vector<int> site_charge;

  // q_i = 1 on every qubit: total charge = Hamming weight.
  static ChargeAssignment hamming(int n_qubits);

  int n_qubits() const { return static_cast<int>(site_charge.size()); }
  int total_charge(std::uint64_t basis_index) const;
  // Basis states with total charge q, in increasing index order.
  std::vector<std::uint64_t> sector_states(int q) const;
  long sector_dimension(int q) const;
};

// i.i.d. complex Gaussian amplitudes, zero mean, variance 1/D per component
// (1/(2D) in each quadrature). Not normalized per realization.
PureState sample_page_state(int n_qubits, RngStream& rng,
                            int max_qubits = kMaxSampledQubits);

// Gaussian amplitudes of variance 1/F(q) on the charge-q sector, exactly zero
// elsewhere. Throws std::domain_error for an empty sector.
PureState sample_charge_eigenstate(int n_qubits, const ChargeAssignment& ca,
                                   int q_total, RngStream& rng,
                                   int max_qubits = kMaxSampledQubits);

}  // namespace tracedist::quantum
