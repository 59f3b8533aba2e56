#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tracedist/predictions.hpp"

using namespace tracedist::pred;

namespace {
constexpr double kPi = 3.14159265358979323846;
const double kHalfPartitionD1 = (4.0 + kPi) / (4.0 * kPi);  // 0.568310...
}  // namespace

TEST_CASE("bipartition derived quantities") {
  const Bipartition part(10, 3);
  CHECK(part.n_a() == 7);
  CHECK(part.f() == doctest::Approx(0.3));
  CHECK(part.dim_a() == 128.0);
  CHECK(part.dim_b() == 8.0);
  CHECK(part.dim() == 1024.0);
  CHECK(part.x() == 8.0);  // 2^(7-3-1)
  CHECK_THROWS_AS(Bipartition(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Bipartition(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(Bipartition(4, -1), std::invalid_argument);
}

TEST_CASE("page trace distance anchors") {
  // N=10, N_B=0: x = 2^9, value 1 - 2^-11.
  CHECK(page_trace_distance(Bipartition(10, 0)) ==
        doctest::Approx(0.99951171875).epsilon(1e-15));
  // x = 1: both branches give 3/4.
  CHECK(page_trace_distance_from_x(1.0) == 0.75);
  CHECK(page_trace_distance_from_x(1.0 - 1e-10) ==
        doctest::Approx(0.75).epsilon(1e-9));
  // Half partition, any even N: (4+pi)/(4pi).
  CHECK(page_trace_distance(Bipartition(10, 5)) ==
        doctest::Approx(kHalfPartitionD1).epsilon(1e-12));
}

TEST_CASE("half-partition value is N-independent") {
  const double reference = page_trace_distance(Bipartition(2, 1));
  for (int n = 4; n <= 400; n += 2) {
    CHECK(page_trace_distance(Bipartition(n, n / 2)) == reference);
  }
  CHECK(reference == doctest::Approx(kHalfPartitionD1).epsilon(1e-12));
}

TEST_CASE("page curve is non-increasing in the traced qubit count") {
  for (const int n : {5, 12}) {
    double prev = page_trace_distance(Bipartition(n, 0));
    for (int nb = 1; nb <= n; ++nb) {
      const double cur = page_trace_distance(Bipartition(n, nb));
      CHECK(cur <= prev + 1e-15);
      prev = cur;
    }
  }
}

TEST_CASE("expansion around the half partition") {
  // page(x) ~ (4+pi)/(4pi) + (2x - 1)/4 for |ln 2x| <= 0.2 (2% accuracy).
  for (double t = -0.2; t <= 0.2001; t += 0.05) {
    const double x = 0.5 * std::exp(t);
    const double value = page_trace_distance_from_x(x);
    const double expansion = kHalfPartitionD1 + 0.25 * (2.0 * x - 1.0);
    CHECK(std::abs(value - expansion) <= 0.02 * value);
  }
}

TEST_CASE("schatten averages from the counting formulas") {
  // n=2 at D_A = D_B = 2: (1/16) 2 N_e(2,1) 2^2 2 = 1.
  CHECK(schatten_n_page_average(2, Bipartition(2, 1)) ==
        doctest::Approx(1.0).epsilon(1e-15));
  // n=4 at D_A = D_B = 4: 5/32 (exact rational).
  CHECK(schatten_n_page_average(4, Bipartition(4, 2)) ==
        doctest::Approx(5.0 / 32.0).epsilon(1e-15));
  // n=4 at D_A = 8, D_B = 2: 1/2.
  CHECK(schatten_n_page_average(4, Bipartition(4, 1)) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK(schatten_n_distance_average(4, Bipartition(4, 2)) ==
        doctest::Approx(5.0 / 64.0).epsilon(1e-15));
  CHECK_THROWS_AS(schatten_n_page_average(3, Bipartition(4, 2)),
                  std::domain_error);
  CHECK_THROWS_AS(schatten_n_page_average(1, Bipartition(4, 2)),
                  std::domain_error);
}

TEST_CASE("single-state moments") {
  for (const auto& part : {Bipartition(4, 1), Bipartition(6, 3), Bipartition(8, 2)})
    CHECK(page_moment_trace_rho_n(1, part) == doctest::Approx(1.0).epsilon(1e-15));
  // Purity of a maximally scrambled state: (D_A + D_B)/D.
  CHECK(page_moment_trace_rho_n(2, Bipartition(4, 2)) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK(page_moment_trace_rho_n(2, Bipartition(6, 2)) ==
        doctest::Approx((16.0 + 4.0) / 64.0).epsilon(1e-15));
  // n=3 at D_A = D_B = 2 (non-crossing part only; the exact Gaussian average
  // is 21/16, the difference being the crossing-permutation 1/D correction).
  CHECK(page_moment_trace_rho_n(3, Bipartition(2, 1)) ==
        doctest::Approx(1.25).epsilon(1e-15));
}

TEST_CASE("charge q0 trace distance") {
  // Identical to the Page value at half partition (c_k = 1 reduction).
  CHECK(charge_q0_trace_distance(Bipartition(10, 5)) ==
        page_trace_distance(Bipartition(10, 5)));
  CHECK(charge_q0_trace_distance(Bipartition(20, 10)) ==
        page_trace_distance(Bipartition(20, 10)));
  // N=10, N_B=1: 1 - 1/(4 x sqrt(2f)), x = 2^7.
  const double expected = 1.0 - 1.0 / (4.0 * 128.0 * std::sqrt(0.2));
  CHECK(charge_q0_trace_distance(Bipartition(10, 1)) ==
        doctest::Approx(expected).epsilon(1e-15));
  CHECK(charge_q0_trace_distance(Bipartition(10, 1)) ==
        doctest::Approx(0.9956326797314457).epsilon(1e-12));
  CHECK(charge_q0_trace_distance(Bipartition(10, 9)) ==
        doctest::Approx(0.05488799104179400).epsilon(1e-10));
  CHECK_THROWS_AS(charge_q0_trace_distance(Bipartition(10, 0)),
                  std::domain_error);
  CHECK_THROWS_AS(charge_q0_trace_distance(Bipartition(10, 10)),
                  std::domain_error);
}

TEST_CASE("charge eigenstates vs Page states: above/below the half partition") {
  // Conservation laws make discrimination harder when measuring more than
  // half of the qubits (f < 1/2) and easier when measuring less (f > 1/2).
  for (int nb = 1; nb <= 4; ++nb)
    CHECK(charge_q0_trace_distance(Bipartition(10, nb)) <
          page_trace_distance(Bipartition(10, nb)));
  for (int nb = 6; nb <= 9; ++nb)
    CHECK(charge_q0_trace_distance(Bipartition(10, nb)) >
          page_trace_distance(Bipartition(10, nb)));
}

TEST_CASE("Eq. (11) branches agree at x = 1, f = 1/2") {
  const double branch_low = 1.0 - 1.0 / (4.0 * 1.0 * std::sqrt(2.0 * 0.5));
  const double branch_high =
      8.0 * std::sqrt(1.0) / (3.0 * kPi) * tracedist::specfun::cal_g(1.0, 0.5);
  CHECK(branch_low == 0.75);
  CHECK(branch_high == doctest::Approx(0.75).epsilon(1e-9));
}

TEST_CASE("general charge sum reduces to the q0 formula") {
  // Half partition: continuum and lattice differ only by Poisson corrections.
  CHECK(charge_general_trace_distance(Bipartition(20, 10), ChargeModel{}) ==
        doctest::Approx(charge_q0_trace_distance(Bipartition(20, 10)))
            .epsilon(1e-3));
  CHECK(charge_general_trace_distance(Bipartition(10, 5), ChargeModel{}) ==
        doctest::Approx(charge_q0_trace_distance(Bipartition(10, 5)))
            .epsilon(1e-3));
  // Interior partitions at N=10: small continuum-vs-lattice residual.
  for (int nb = 3; nb <= 7; ++nb)
    CHECK(charge_general_trace_distance(Bipartition(10, nb), ChargeModel{}) ==
          doctest::Approx(charge_q0_trace_distance(Bipartition(10, nb)))
              .epsilon(2e-3));
  CHECK_THROWS_AS(
      charge_general_trace_distance(Bipartition(10, 0), ChargeModel{}),
      std::domain_error);
}

TEST_CASE("single traced qubit: Q-dependence follows exp(Q^2 / 2 gamma^2 N)") {
  // 1 - <D1> at n_b = 1 scales with 1/F(Q); probe on the charge lattice at
  // Q = 3 ~ 2 gamma sqrt(N) and compare the ratio to the Gaussian prediction.
  const Bipartition part(10, 1);
  const double gamma = 0.5;
  const double d0 = charge_general_trace_distance(part, ChargeModel{gamma, 0.0});
  const double dq = charge_general_trace_distance(part, ChargeModel{gamma, 3.0});
  const double ratio = (1.0 - dq) / (1.0 - d0);
  const double predicted = std::exp(9.0 / (2.0 * gamma * gamma * 10.0));
  CHECK(std::abs(ratio - predicted) <= 0.10 * predicted);
}

TEST_CASE("closed-form half partition at finite Q") {
  const ChargeModel q1{0.5, 1.0};
  CHECK(charge_half_partition_closed(20, q1) ==
        doctest::Approx(0.5734630512).epsilon(1e-7));
  const ChargeModel qpeak{0.5, 2.236};
  CHECK(charge_half_partition_closed(20, qpeak) ==
        doctest::Approx(0.5778902126).epsilon(1e-7));
  const ChargeModel qbig{0.5, 120.0};
  CHECK(charge_half_partition_closed(20, qbig) ==
        doctest::Approx(0.50514172).epsilon(1e-6));
  CHECK_THROWS_AS(charge_half_partition_closed(20, ChargeModel{0.5, 0.0}),
                  std::domain_error);
  CHECK_THROWS_AS(charge_half_partition_closed(15, ChargeModel{0.5, 1.0}),
                  std::invalid_argument);
}

TEST_CASE("closed form limits") {
  // Q -> 0+ recovers the Q=0 universal value at f = 1/2.
  CHECK(charge_half_partition_closed(20, ChargeModel{0.5, 1e-4}) ==
        doctest::Approx(charge_q0_trace_distance(Bipartition(20, 10)))
            .epsilon(1e-6));
  // Large Q approaches 1/2.
  CHECK(charge_half_partition_closed(20, ChargeModel{0.5, 400.0}) ==
        doctest::Approx(0.5).epsilon(4e-3));
  // Consistency with the lattice sum at the same (N, Q, gamma).
  for (double q = 1.0; q <= 8.0; q += 1.0)
    CHECK(charge_half_partition_closed(20, ChargeModel{0.5, q}) ==
          doctest::Approx(charge_general_trace_distance(
                              Bipartition(20, 10), ChargeModel{0.5, q}))
              .epsilon(1e-2));
}

TEST_CASE("discrimination probability") {
  CHECK(discrimination_probability(1.0) == 1.0);
  CHECK(discrimination_probability(0.0) == 0.5);
  CHECK(discrimination_probability(kHalfPartitionD1) ==
        doctest::Approx((5.0 * kPi + 4.0) / (8.0 * kPi)).epsilon(1e-12));
  CHECK_THROWS_AS(discrimination_probability(-0.1), std::domain_error);
  CHECK_THROWS_AS(discrimination_probability(1.1), std::domain_error);
}
