#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>
#include <vector>

#include "tracedist/eigenstate_analysis.hpp"
#include "tracedist/ising.hpp"
#include "tracedist/rng.hpp"
#include "tracedist/syk.hpp"

using namespace tracedist;
using namespace tracedist::models;

namespace {

Eigen::MatrixXd translation_matrix(int n) {
  const long dim = 1L << n;
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(dim, dim);
  for (long b = 0; b < dim; ++b)
    t(static_cast<long>(translate_basis(static_cast<std::uint64_t>(b), n)), b) = 1.0;
  return t;
}

}  // namespace

TEST_CASE("majorana operators satisfy the Clifford algebra") {
  const int nm = 8;
  const long dim = 1L << (nm / 2);
  std::vector<Eigen::MatrixXcd> chi;
  for (int i = 0; i < nm; ++i) chi.push_back(majorana_operator(i, nm));
  for (int i = 0; i < nm; ++i) {
    CHECK((chi[i] - chi[i].adjoint()).norm() < 1e-12);
    for (int j = i; j < nm; ++j) {
      const Eigen::MatrixXcd anti = chi[i] * chi[j] + chi[j] * chi[i];
      const double expected = i == j ? 2.0 : 0.0;
      CHECK((anti - expected * Eigen::MatrixXcd::Identity(dim, dim)).norm() <
            1e-12);
    }
  }
}

TEST_CASE("SYK Hamiltonian is Hermitian and parity conserving") {
  const SykSpec spec{10, 99, 0};
  const Eigen::MatrixXcd h = build_syk_hamiltonian(spec);
  CHECK((h - h.adjoint()).norm() < 1e-12);
  const Eigen::MatrixXcd p = parity_operator(10);
  CHECK((h * p - p * h).norm() < 1e-12);
  CHECK_THROWS_AS(build_syk_hamiltonian(SykSpec{7, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(build_syk_hamiltonian(SykSpec{30, 0, 0}), std::length_error);
}

TEST_CASE("SYK couplings are reproducible") {
  const SykSpec spec{8, 5, 3};
  const Eigen::MatrixXcd a = build_syk_hamiltonian(spec);
  const Eigen::MatrixXcd b = build_syk_hamiltonian(spec);
  CHECK(a == b);
  const Eigen::MatrixXcd c = build_syk_hamiltonian(SykSpec{8, 5, 4});
  CHECK((a - c).norm() > 1e-6);
}

TEST_CASE("SYK coupling variance sum rule") {
  // E[tr H^2 / dim] = sum_{i<j<k<l} <J^2> = C(N,4) 6 J^2 / N^3.
  const int nm = 8;
  const int realizations = 60;
  double sum = 0.0, sum_sq = 0.0;
  for (int r = 0; r < realizations; ++r) {
    const Eigen::MatrixXcd h = build_syk_hamiltonian(SykSpec{nm, 17, static_cast<std::uint64_t>(r)});
    const double value = (h * h).trace().real() / static_cast<double>(h.rows());
    sum += value;
    sum_sq += value * value;
  }
  const double mean = sum / realizations;
  const double sd =
      std::sqrt((sum_sq - realizations * mean * mean) / (realizations - 1));
  const SykSpec spec{nm, 0, 0};
  const double expected = 70.0 * spec.coupling_variance();  // C(8,4) = 70
  CHECK(std::abs(mean - expected) <
        3.0 * sd / std::sqrt(static_cast<double>(realizations)));
}

TEST_CASE("even parity sector") {
  SUBCASE("dimension map matches the qubit counting") {
    const Eigen::MatrixXcd h = build_syk_hamiltonian(SykSpec{14, 1, 0});
    const Eigen::MatrixXcd sector = even_parity_sector(h);
    CHECK(sector.rows() == 64);  // N_M = 14 -> 6 effective qubits
    CHECK((sector - sector.adjoint()).norm() < 1e-12);
  }
  SUBCASE("sector spectrum is a subset of the full spectrum") {
    const Eigen::MatrixXcd h = build_syk_hamiltonian(SykSpec{10, 2, 0});
    const Eigen::MatrixXcd sector = even_parity_sector(h);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> full(h, Eigen::EigenvaluesOnly);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> sub(sector,
                                                        Eigen::EigenvaluesOnly);
    // Both spectra sorted; every sector eigenvalue appears in the full list.
    long cursor = 0;
    for (long i = 0; i < sub.eigenvalues().size(); ++i) {
      while (cursor < full.eigenvalues().size() &&
             full.eigenvalues()[cursor] < sub.eigenvalues()[i] - 1e-10)
        ++cursor;
      REQUIRE(cursor < full.eigenvalues().size());
      CHECK(std::abs(full.eigenvalues()[cursor] - sub.eigenvalues()[i]) < 1e-10);
      ++cursor;
    }
  }
  SUBCASE("parity violation is rejected") {
    Eigen::MatrixXcd h = build_syk_hamiltonian(SykSpec{8, 3, 0});
    h(0, 1) += 1.0;  // connects weight 0 to weight 1
    h(1, 0) += 1.0;
    CHECK_THROWS_AS(even_parity_sector(h), std::runtime_error);
  }
}

TEST_CASE("Ising Hamiltonian construction") {
  SUBCASE("N=2 matrix matches the hand computation") {
    const IsingSpec spec{2, 0.9045, 0.8090, 1.0};
    const Eigen::MatrixXd h = build_ising_hamiltonian(spec);
    // Basis order |00>, |01>, |10>, |11> with site 0 the most significant bit.
    Eigen::MatrixXd expected(4, 4);
    const double g = spec.g, hz = spec.h, j = spec.j;
    expected << 2 * hz + 2 * j, g, g, 0,
                g, -2 * j, 0, g,
                g, 0, -2 * j, g,
                0, g, g, -2 * hz + 2 * j;
    CHECK((h - expected).norm() < 1e-14);
  }
  SUBCASE("g = 0 is diagonal with classical energies") {
    const IsingSpec spec{5, 0.0, 0.8090, 1.0};
    const Eigen::MatrixXd h = build_ising_hamiltonian(spec);
    CHECK((h - Eigen::MatrixXd(h.diagonal().asDiagonal())).norm() == 0.0);
    // All-up state: energy N h + N J.
    CHECK(h(0, 0) == doctest::Approx(5 * spec.h + 5 * spec.j).epsilon(1e-14));
  }
  SUBCASE("translation invariance") {
    const Eigen::MatrixXd h = build_ising_hamiltonian(IsingSpec{8});
    const Eigen::MatrixXd t = translation_matrix(8);
    CHECK((h * t - t * h).cwiseAbs().maxCoeff() < 1e-12);
  }
  CHECK_THROWS_AS(build_ising_hamiltonian(IsingSpec{16}), std::length_error);
}

TEST_CASE("translate_basis moves site 0 to site 1") {
  // Site 0 is bit n-1. For n=3: |100> -> |010>.
  CHECK(translate_basis(0b100, 3) == 0b010);
  CHECK(translate_basis(0b001, 3) == 0b100);
  CHECK(translate_basis(0b101, 3) == 0b110);
}

TEST_CASE("momentum sectors") {
  SUBCASE("N=2 dimensions") {
    const auto sectors = momentum_sectors(2);
    REQUIRE(sectors.size() == 2);
    CHECK(sectors[0].dim() == 3);
    CHECK(sectors[1].dim() == 1);
  }
  SUBCASE("completeness and orthonormality") {
    for (const int n : {3, 4, 6, 8}) {
      const auto sectors = momentum_sectors(n);
      long total = 0;
      for (const auto& s : sectors) {
        total += s.dim();
        const Eigen::MatrixXcd gram = s.basis.adjoint() * s.basis;
        CHECK((gram - Eigen::MatrixXcd::Identity(s.dim(), s.dim())).norm() <
              1e-10);
      }
      CHECK(total == (1L << n));
    }
  }
  SUBCASE("translation eigenvectors and block diagonalization") {
    const int n = 6;
    const auto sectors = momentum_sectors(n);
    const Eigen::MatrixXd t = translation_matrix(n);
    const Eigen::MatrixXd h = build_ising_hamiltonian(IsingSpec{n});
    for (const auto& s : sectors) {
      const std::complex<double> phase(std::cos(2 * M_PI * s.momentum / n),
                                       std::sin(2 * M_PI * s.momentum / n));
      CHECK((t * s.basis - phase * s.basis).norm() < 1e-10);
    }
    for (std::size_t a = 0; a < sectors.size(); ++a)
      for (std::size_t b = a + 1; b < sectors.size(); ++b) {
        const Eigen::MatrixXcd cross =
            sectors[a].basis.adjoint() * h * sectors[b].basis;
        CHECK(cross.cwiseAbs().maxCoeff() < 1e-10);
      }
  }
}

TEST_CASE("gaussian dos fit") {
  SUBCASE("recovers synthetic parameters") {
    RngStream rng(7, 0);
    const double mu = -0.4, sigma = 0.3;
    std::vector<double> values;
    const int n = 5000;
    for (int i = 0; i < n; ++i) values.push_back(mu + sigma * rng.normal());
    const DosFit fit = gaussian_dos_fit(values);
    CHECK(std::abs(fit.mean - mu) < 3.0 * sigma / std::sqrt(n));
    CHECK(std::abs(fit.width - sigma) < 3.0 * sigma / std::sqrt(2.0 * n));
  }
  SUBCASE("degenerate input is rejected") {
    std::vector<double> flat(20, 1.0);
    CHECK_THROWS_AS(gaussian_dos_fit(flat), std::invalid_argument);
    std::vector<double> tiny(5, 0.0);
    CHECK_THROWS_AS(gaussian_dos_fit(tiny), std::invalid_argument);
  }
}

TEST_CASE("band-center eigenstate selection") {
  Eigen::VectorXd evals(12);
  evals << -3.0, -1.0, -0.5, 0.2, 0.4, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0;
  const Eigen::MatrixXcd h = evals.cast<std::complex<double>>().asDiagonal();
  const double mean = evals.mean();  // 2.0083

  SUBCASE("count=1 returns the eigenstate closest to the fitted peak") {
    const auto band = band_center_eigenstates(h, EnergyWindow{}, 1);
    REQUIRE(band.energies.size() == 1);
    CHECK(band.energies[0] == 2.0);
    CHECK(band.fit.mean == doctest::Approx(mean).epsilon(1e-14));
  }
  SUBCASE("window filtering applies before ranking") {
    const auto band = band_center_eigenstates(h, EnergyWindow{-2.0, 0.5}, 10);
    REQUIRE(band.energies.size() == 4);  // -1, -0.5, 0.2, 0.4
    CHECK(band.energies[0] == 0.4);      // nearest to 2.05 first
  }
  SUBCASE("empty window is an error") {
    CHECK_THROWS_AS(band_center_eigenstates(h, EnergyWindow{10.0, 11.0}, 2),
                    std::runtime_error);
  }
}

TEST_CASE("Ising zero-momentum band center reproduces the reference setup") {
  const int n = 10;
  const Eigen::MatrixXd h = build_ising_hamiltonian(IsingSpec{n});
  const auto sectors = momentum_sectors(n);
  const Eigen::MatrixXcd block = sectors[0].project(h);
  CHECK(block.rows() == 108);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(block,
                                                         Eigen::EigenvaluesOnly);
  std::vector<double> evals(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + block.rows());
  const DosFit fit = gaussian_dos_fit(evals);
  // The sector density of states is centered near the band middle; width is
  // extensive (about half a coupling unit per site).
  CHECK(std::abs(fit.mean) < 0.15 * fit.width);
  CHECK(fit.width / n > 0.4);
  CHECK(fit.width / n < 0.7);

  // The reference energy window (-0.8, 0.0) holds at least the 5 states used
  // for the 10-spin analysis.
  int in_window = 0;
  for (const double e : evals)
    if (e > -0.8 && e < 0.0) ++in_window;
  CHECK(in_window >= 5);
}

TEST_CASE("lifted band-center states are translation eigenstates") {
  const int n = 6;
  const Eigen::MatrixXd h = build_ising_hamiltonian(IsingSpec{n});
  const auto sectors = momentum_sectors(n);
  const auto band =
      band_center_eigenstates(sectors[0].project(h), EnergyWindow{}, 3);
  const Eigen::MatrixXd t = translation_matrix(n);
  for (const auto& v : band.vectors) {
    const quantum::PureState state = sectors[0].lift(v);
    CHECK(state.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((t * state.amplitudes - state.amplitudes).norm() < 1e-10);  // k = 0
  }
}

TEST_CASE("pair distances of eigenstates") {
  SUBCASE("identical states give zero distance") {
    quantum::PureState plus{Eigen::VectorXcd::Zero(16), 4};
    plus.amplitudes.setConstant(0.25);
    const auto rows = eigenstate_pair_distances({plus, plus}, {1, 2, 3});
    for (const auto& row : rows) {
      CHECK(row.mean == doctest::Approx(0.0).epsilon(1e-12));
      CHECK(row.pairs == 1);
    }
  }
  SUBCASE("row bookkeeping") {
    RngStream rng(3, 0);
    std::vector<quantum::PureState> states;
    for (int i = 0; i < 5; ++i)
      states.push_back(quantum::sample_page_state(6, rng).normalized());
    const auto rows = eigenstate_pair_distances(states, {2, 3});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].n_b == 2);
    CHECK(rows[0].f == doctest::Approx(2.0 / 6.0));
    CHECK(rows[0].pairs == 10);
    for (const auto& row : rows) {
      CHECK(row.mean >= 0.0);
      CHECK(row.mean <= 1.0);
      CHECK(row.std_dev >= 0.0);
    }
  }
  SUBCASE("input validation") {
    quantum::PureState s{Eigen::VectorXcd::Zero(4), 2};
    s.amplitudes[0] = 1.0;
    CHECK_THROWS_AS(eigenstate_pair_distances({s}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(eigenstate_pair_distances({s, s}, {2}), std::invalid_argument);
  }
}
