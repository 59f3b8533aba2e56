#include "tracedist/ising.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace tracedist::models {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

void check_spin_count(int n_spins) {
  if (n_spins < 2) throw std::invalid_argument("Ising: n_spins must be >= 2");
  if (n_spins > kMaxIsingSpins)
    throw std::length_error("Ising: n_spins exceeds memory guard");
}

double z_eigenvalue(std::uint64_t b, int site, int n_spins) {
  return (b >> (n_spins - 1 - site)) & 1ull ? -1.0 : 1.0;
}

}  // namespace

std::uint64_t translate_basis(std::uint64_t b, int n_spins) {
  // Site i -> site i+1 means bit n-1-i -> bit n-2-i: rotate right by one.
  const std::uint64_t mask = (1ull << n_spins) - 1;
  return ((b >> 1) | (b << (n_spins - 1))) & mask;
}

Eigen::MatrixXd build_ising_hamiltonian(const IsingSpec& spec) {
  check_spin_count(spec.n_spins);
  const int n = spec.n_spins;
  const long dim = 1L << n;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (long b = 0; b < dim; ++b) {
    double diag = 0.0;
    for (int i = 0; i < n; ++i) {
      const double zi = z_eigenvalue(b, i, n);
      const double zj = z_eigenvalue(b, (i + 1) % n, n);
      diag += spec.h * zi + spec.j * zi * zj;
      h(b ^ (1L << (n - 1 - i)), b) += spec.g;
    }
    h(b, b) += diag;
  }
  return h;
}

Eigen::MatrixXcd MomentumSector::project(const Eigen::MatrixXd& h) const {
  if (h.rows() != basis.rows())
    throw std::invalid_argument("MomentumSector: Hamiltonian dimension mismatch");
  return basis.adjoint() * h * basis;
}

quantum::PureState MomentumSector::lift(const Eigen::VectorXcd& block_vector) const {
  if (block_vector.size() != dim())
    throw std::invalid_argument("MomentumSector: block vector dimension mismatch");
  return {basis * block_vector, n_spins};
}

std::vector<MomentumSector> momentum_sectors(int n_spins) {
  check_spin_count(n_spins);
  const int n = n_spins;
  const long dim = 1L << n;

  std::vector<MomentumSector> sectors(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    sectors[k].momentum = k;
    sectors[k].n_spins = n;
  }
  std::vector<std::vector<Eigen::VectorXcd>> columns(static_cast<std::size_t>(n));

  std::vector<bool> seen(static_cast<std::size_t>(dim), false);
  for (long rep = 0; rep < dim; ++rep) {
    if (seen[rep]) continue;
    std::vector<long> orbit;
    std::uint64_t b = static_cast<std::uint64_t>(rep);
    do {
      orbit.push_back(static_cast<long>(b));
      seen[static_cast<std::size_t>(b)] = true;
      b = translate_basis(b, n);
    } while (b != static_cast<std::uint64_t>(rep));
    const int period = static_cast<int>(orbit.size());

    // Momentum k is compatible with the orbit iff k * period = 0 mod n.
    for (int k = 0; k < n; ++k) {
      if ((static_cast<long>(k) * period) % n != 0) continue;
      Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
      const double norm = 1.0 / std::sqrt(static_cast<double>(period));
      for (int t = 0; t < period; ++t) {
        const double phase = -kTwoPi * k * t / n;
        v[orbit[static_cast<std::size_t>(t)]] +=
            norm * std::complex<double>(std::cos(phase), std::sin(phase));
      }
      columns[static_cast<std::size_t>(k)].push_back(std::move(v));
    }
  }

  for (int k = 0; k < n; ++k) {
    auto& cols = columns[static_cast<std::size_t>(k)];
    sectors[k].basis.resize(dim, static_cast<long>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c)
      sectors[k].basis.col(static_cast<long>(c)) = cols[c];
  }
  return sectors;
}

}  // namespace tracedist::models
