#pragma once

namespace tracedist::specfun {

// Truncation policy for the power series in this module. Terms at x = 1 decay
// only algebraically (~k^{-7/2}), so the defaults still resolve that case to
// ~1e-10.
struct SeriesControl {
  double rel_tol = 1e-12;
  int max_terms = 10000;
};

// Generalized binomial a(a-1)...(a-k+1)/k! for real upper index and integer k.
double generalized_binomial(double a, int k);

// Gamma-extended binomial Gamma(a+1)/(Gamma(b+1) Gamma(a-b+1)) for real a, b.
// Returns (signed) zero when a pole of Gamma lands in the denominator.
double gamma_binomial(double a, double b);

// Gauss hypergeometric series 2F1(a, b; c; x) on 0 <= x <= 1. Requires c not
// a non-positive integer, and c - a - b > 0 when x == 1 unless the series
// terminates. Throws std::runtime_error if max_terms is hit first.
double hyp2f1(double a, double b, double c, double x, SeriesControl ctrl = {});

// Complementary error function, abs error <= 1e-12 on |x| <= 10.
double erfc(double x);

// Scaled complement exp(x^2) erfc(x) for x >= 0.
double erfcx(double x);

// F(x) = 2F1(1/2, -1/2; 5/2; x).
double cal_f(double x, SeriesControl ctrl = {});

// G(x, f) = (3 pi / 4) sum_k c_k x^k C(1/2, k) C(1, k+3/2) with
// c_k = ((1+2k) f + 1/2 - k)^{-1/2}. Requires f >= 1/2 so all radicands stay
// positive, and 0 <= x <= 1. G(x, 1/2) == F(x).
double cal_g(double x, double f, SeriesControl ctrl = {});

}  // namespace tracedist::specfun
