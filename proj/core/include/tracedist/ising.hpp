#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "tracedist/state.hpp"

namespace tracedist::models {

// Chaotic Ising chain H = sum_i (g sx_i + h sz_i + J sz_i sz_{i+1}) with
// periodic boundary. Default couplings are the standard thermalizing point.
// Site i lives on basis bit n_spins-1-i (site 0 is the most significant bit),
// so a leading block of sites is subsystem A of the shared convention.
struct IsingSpec {
  int n_spins;
  double g = 0.9045;
  double h = 0.8090;
  double j = 1.0;
};

inline constexpr int kMaxIsingSpins = 14;

// One-site translation T (site i -> i+1) on the basis index.
std::uint64_t translate_basis(std::uint64_t b, int n_spins);

Eigen::MatrixXd build_ising_hamiltonian(const IsingSpec& spec);

// Orthonormal translation eigenbasis with T v = exp(2 pi i k / n) v.
struct MomentumSector {
  int momentum = 0;
  int n_spins = 0;
  Eigen::MatrixXcd basis;  // 2^n x dim, columns orthonormal

  long dim() const { return basis.cols(); }
  Eigen::MatrixXcd project(const Eigen::MatrixXd& h) const;
  quantum::PureState lift(const Eigen::VectorXcd& block_vector) const;
};

// All momentum sectors k = 0..n-1; dimensions sum to 2^n.
std::vector<MomentumSector> momentum_sectors(int n_spins);

}  // namespace tracedist::models
