#pragma once

#include "tracedist/special_functions.hpp"

namespace tracedist::pred {

using specfun::SeriesControl;

// Qubit bipartition: n_b of the n_total qubits are traced out. Dimensions are
// derived, and x = D_A / (2 D_B) = 2^(n_a - n_b - 1) is the branch variable of
// the closed-form results.
struct Bipartition {
  int n_total;
  int n_b;

  Bipartition(int n_total, int n_b);

  int n_a() const { return n_total - n_b; }
  double f() const { return static_cast<double>(n_b) / n_total; }
  double dim_a() const;
  double dim_b() const;
  double dim() const;
  double x() const;
};

// Gaussian spectral-density model of a subsystem-additive conserved charge.
// Per-qubit width gamma; q_total is measured from the charge of largest
// spectral weight (q_total = 0 at the peak). The default matches the
// Hamming-weight assignment: integer charge lattice, gamma = 1/2.
struct ChargeModel {
  double gamma = 0.5;
  double q_total = 0.0;
};

// Spectral density Omega(q, n_s) = exp(-q^2 / (2 gamma^2 n_s)) /
// sqrt(2 pi gamma^2 n_s); F_S = D_S * Omega.
double spectral_density(double q, double gamma, int n_sites);

// Average trace-distance of two random Page states:
//   1 - 1/(4x)           for x >= 1,
//   (8 sqrt(x)/3pi) F(x) for x <= 1,  F(x) = 2F1(1/2,-1/2,5/2,x).
// Exact up to O(1/D); the value at n_b = n_total is an O(1/sqrt(D)) artifact
// of the on-average-only state normalization.
double page_trace_distance(const Bipartition& part, SeriesControl ctrl = {});

// Same with the branch variable given directly.
double page_trace_distance_from_x(double x, SeriesControl ctrl = {});

// <tr (rho_A - sigma_A)^n> for even n in the non-crossing approximation:
// (1/D^n) sum_{k=1}^{n/2} 2^k N_e(n,k) D_A^{n-k+1} D_B^k, evaluated with exact
// integer arithmetic. Throws std::domain_error for odd n (those averages
// vanish identically).
double schatten_n_page_average(int n, const Bipartition& part);

// <D_n^n> = <tr (rho_A - sigma_A)^n> / 2 under the 2^{-1/n} normalization.
double schatten_n_distance_average(int n, const Bipartition& part);

// Single-state moment <tr rho_A^n> = (1/D^n) sum_k N(n,k) D_A^{n-k+1} D_B^k.
double page_moment_trace_rho_n(int n, const Bipartition& part);

// Average trace-distance of two charge eigenstates at the peak charge Q = 0:
//   1 - 1/(4x sqrt(2f))            for n_a > n_b,
//   (8 sqrt(x_f)/3pi) G(x_f, f)    for n_a <= n_b,  x_f = x sqrt(f/(1-f)).
// The integer branch test n_a <= n_b is equivalent to x <= 1 and guarantees
// f >= 1/2 on the series branch, so the G radicands stay positive.
// Degenerate partitions n_b in {0, n_total} are rejected.
double charge_q0_trace_distance(const Bipartition& part, SeriesControl ctrl = {});

// Gaussian-continuum evaluation of the general charge-eigenstate average:
// lattice sum over Q_A (integer spacing, A-lattice offset -n_a/2) of the
// two-branch summand with x = F_A(Q_A) / (2 F_B(Q - Q_A)), truncated 8 sigma
// past the Gaussian peaks. Degenerate partitions are rejected.
double charge_general_trace_distance(const Bipartition& part,
                                     const ChargeModel& cm,
                                     SeriesControl ctrl = {});

// Closed-form half-partition average at finite Q: erfc expression with
// C = gamma^2 ln 2. Requires n_total even and Q != 0 (the Q -> 0 limit is
// charge_q0_trace_distance at f = 1/2).
double charge_half_partition_closed(int n_total, const ChargeModel& cm,
                                    SeriesControl ctrl = {});

// Holevo-Helstrom success probability (1 + d1) / 2.
double discrimination_probability(double d1);

}  // namespace tracedist::pred
