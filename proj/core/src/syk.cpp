#include "tracedist/syk.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace tracedist::models {

namespace {

using Complex = std::complex<double>;

// Pauli string i^{phase} prod_q X_q^{x} Z_q^{z}, masks in basis-bit space
// (qubit q <-> bit n_qubits-1-q). Acting on |b>: Z part first, then X flips.
struct PauliOp {
  std::uint32_t x = 0;
  std::uint32_t z = 0;
  int phase_quarter = 0;  // power of i, mod 4

  PauliOp& operator*=(const PauliOp& rhs) {
    // Z^z1 X^x2 = (-1)^{|z1 & x2|} X^x2 Z^z1
    phase_quarter = (phase_quarter + rhs.phase_quarter +
                     2 * std::popcount(z & rhs.x)) % 4;
    x ^= rhs.x;
    z ^= rhs.z;
    return *this;
  }
};

int qubit_bit(int qubit, int n_qubits) { return n_qubits - 1 - qubit; }

PauliOp majorana_string(int index, int n_qubits) {
  const int qubit = index / 2;
  PauliOp op;
  for (int q = 0; q < qubit; ++q) op.z |= 1u << qubit_bit(q, n_qubits);
  op.x |= 1u << qubit_bit(qubit, n_qubits);
  if (index % 2 == 1) {
    // Y = i X Z
    op.z |= 1u << qubit_bit(qubit, n_qubits);
    op.phase_quarter = 1;
  }
  return op;
}

void add_string(Eigen::MatrixXcd& h, const PauliOp& op, double coeff) {
  static const Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const long dim = h.rows();
  for (long b = 0; b < dim; ++b) {
    const int sign = std::popcount(static_cast<std::uint32_t>(b) & op.z) % 2 ? -1 : 1;
    h(b ^ op.x, b) += coeff * static_cast<double>(sign) * kPhases[op.phase_quarter];
  }
}

Eigen::MatrixXcd string_matrix(const PauliOp& op, long dim) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  add_string(m, op, 1.0);
  return m;
}

void check_majorana_count(int n_majorana) {
  if (n_majorana < 2 || n_majorana % 2 != 0)
    throw std::invalid_argument("SYK: n_majorana must be even and >= 2");
  if (n_majorana > kMaxMajoranas)
    throw std::length_error("SYK: n_majorana exceeds memory guard");
}

}  // namespace

double SykSpec::coupling_scale() const { return 2.0 / std::sqrt(n_majorana); }

double SykSpec::coupling_variance() const {
  const double j = coupling_scale();
  const double n = n_majorana;
  return 6.0 * j * j / (n * n * n);
}

Eigen::MatrixXcd majorana_operator(int index, int n_majorana) {
  check_majorana_count(n_majorana);
  if (index < 0 || index >= n_majorana)
    throw std::invalid_argument("majorana_operator: index outside 0..N-1");
  return string_matrix(majorana_string(index, n_majorana / 2), 1L << (n_majorana / 2));
}

Eigen::MatrixXcd parity_operator(int n_majorana) {
  check_majorana_count(n_majorana);
  const int n_qubits = n_majorana / 2;
  const long dim = 1L << n_qubits;
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim, dim);
  for (long b = 0; b < dim; ++b)
    p(b, b) = std::popcount(static_cast<std::uint64_t>(b)) % 2 ? -1.0 : 1.0;
  return p;
}

Eigen::MatrixXcd build_syk_hamiltonian(const SykSpec& spec) {
  check_majorana_count(spec.n_majorana);
  const int nm = spec.n_majorana;
  const int n_qubits = nm / 2;
  const long dim = 1L << n_qubits;
  const double sigma = std::sqrt(spec.coupling_variance());

  RngStream rng(spec.seed, spec.realization);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 0; i < nm; ++i)
    for (int j = i + 1; j < nm; ++j)
      for (int k = j + 1; k < nm; ++k)
        for (int l = k + 1; l < nm; ++l) {
          const double coupling = sigma * rng.normal();
          PauliOp op = majorana_string(i, n_qubits);
          op *= majorana_string(j, n_qubits);
          op *= majorana_string(k, n_qubits);
          op *= majorana_string(l, n_qubits);
          add_string(h, op, coupling);
        }
  return h;
}

Eigen::MatrixXcd even_parity_sector(const Eigen::MatrixXcd& h) {
  const long dim = h.rows();
  if (dim < 2 || h.cols() != dim || (dim & (dim - 1)) != 0)
    throw std::invalid_argument("even_parity_sector: input must be 2^n x 2^n");

  // Parity conservation <=> no matrix element connects even and odd weight.
  double violation = 0.0;
  for (long b = 0; b < dim; ++b)
    for (long a = 0; a < dim; ++a)
      if ((std::popcount(static_cast<std::uint64_t>(a)) +
           std::popcount(static_cast<std::uint64_t>(b))) % 2)
        violation = std::max(violation, std::abs(h(a, b)));
  if (violation > 1e-10)
    throw std::runtime_error("even_parity_sector: input does not conserve parity");

  const long sector_dim = dim / 2;
  const auto full_index = [](long c) {
    return (c << 1) |
           static_cast<long>(std::popcount(static_cast<std::uint64_t>(c)) % 2);
  };
  Eigen::MatrixXcd sector(sector_dim, sector_dim);
  for (long col = 0; col < sector_dim; ++col)
    for (long row = 0; row < sector_dim; ++row)
      sector(row, col) = h(full_index(row), full_index(col));
  return sector;
}

}  // namespace tracedist::models
