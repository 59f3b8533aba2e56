#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "tracedist/rng.hpp"

namespace tracedist::models {

// SYK model of n_majorana Majorana fermions on n_majorana/2 qubits:
//   H = sum_{i<j<k<l} J_ijkl chi_i chi_j chi_k chi_l,
// couplings Gaussian with <J^2> = 6 J^2 / N^3, J = 2/sqrt(N).
//
// Representation: Majorana 2q (2q+1) is X (Y) on qubit q with a Z string on
// qubits 0..q-1, normalized so chi^2 = 1. Qubit q corresponds to the fermion
// pair (2q, 2q+1), i.e. qubit q stores occupation of fermion mode q, and
// qubit 0 is the most significant index bit as everywhere in this project.
struct SykSpec {
  int n_majorana;
  std::uint64_t seed = 0;
  std::uint64_t realization = 0;

  double coupling_scale() const;               // J = 2/sqrt(N)
  double coupling_variance() const;            // 6 J^2 / N^3
};

inline constexpr int kMaxMajoranas = 28;

// Single Majorana operator as a dense matrix (dimension 2^{n_majorana/2});
// mainly for algebra checks in tests.
Eigen::MatrixXcd majorana_operator(int index, int n_majorana);

// Fermion parity operator (all-Z string).
Eigen::MatrixXcd parity_operator(int n_majorana);

// Dense SYK Hamiltonian; Hermitian to machine precision by construction.
Eigen::MatrixXcd build_syk_hamiltonian(const SykSpec& spec);

// Restriction of a parity-conserving Hamiltonian to the even-parity sector
// (basis states with even qubit-occupation weight), dimension 2^{N/2 - 1}.
// Sector index c keeps qubits 0..n-2 and fixes the last qubit so total weight
// stays even, so the sector space is itself a qubit register one qubit
// smaller. Throws if the input violates parity beyond 1e-10.
Eigen::MatrixXcd even_parity_sector(const Eigen::MatrixXcd& h);

}  // namespace tracedist::models
