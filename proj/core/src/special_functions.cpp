#include "tracedist/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace tracedist::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

// log|Gamma(x)| with the sign of Gamma(x); sign 0 marks a pole.
struct SignedLogGamma {
  double log_abs;
  int sign;
};

SignedLogGamma signed_lgamma(double x) {
  if (x > 0.0) return {std::lgamma(x), 1};
  if (is_nonpositive_integer(x)) return {0.0, 0};
  // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x)).
  const double s = std::sin(kPi * x);
  return {std::log(kPi) - std::log(std::abs(s)) - std::lgamma(1.0 - x),
          s > 0.0 ? 1 : -1};
}

}  // namespace

double generalized_binomial(double a, int k) {
  if (k < 0) throw std::invalid_argument("generalized_binomial: k must be >= 0");
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= (a - i) / (i + 1);
  return r;
}

double gamma_binomial(double a, double b) {
  const SignedLogGamma num = signed_lgamma(a + 1.0);
  if (num.sign == 0)
    throw std::domain_error("gamma_binomial: pole in numerator gamma");
  const SignedLogGamma d1 = signed_lgamma(b + 1.0);
  const SignedLogGamma d2 = signed_lgamma(a - b + 1.0);
  if (d1.sign == 0 || d2.sign == 0) return d1.sign * d2.sign * 0.0;
  const int sign = num.sign * d1.sign * d2.sign;
  return sign * std::exp(num.log_abs - d1.log_abs - d2.log_abs);
}

double hyp2f1(double a, double b, double c, double x, SeriesControl ctrl) {
  if (is_nonpositive_integer(c))
    throw std::invalid_argument("hyp2f1: c must not be a non-positive integer");
  if (x < 0.0 || x > 1.0)
    throw std::invalid_argument("hyp2f1: x outside [0, 1]");
  const bool terminating =
      is_nonpositive_integer(a) || is_nonpositive_integer(b);
  if (x == 1.0 && !terminating && c - a - b <= 0.0)
    throw std::invalid_argument("hyp2f1: divergent at x = 1 (needs c-a-b > 0)");

  double sum = 1.0;
  double term = 1.0;
  for (int k = 0; k < ctrl.max_terms; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * x;
    if (term == 0.0) return sum;  // terminating series
    sum += term;
    if (std::abs(term) <= ctrl.rel_tol * std::abs(sum)) return sum;
  }
  throw std::runtime_error("hyp2f1: series did not converge within max_terms");
}

double erfc(double x) { return std::erfc(x); }

double erfcx(double x) {
  if (x < 0.0) throw std::invalid_argument("erfcx: requires x >= 0");
  if (x < 25.0) return std::exp(x * x) * std::erfc(x);
  // Asymptotic tail: erfcx(x) = 1/(x sqrt(pi)) sum_m (-1)^m (2m-1)!!/(2x^2)^m.
  const double inv2x2 = 1.0 / (2.0 * x * x);
  double term = 1.0, sum = 1.0;
  for (int m = 1; m <= 8; ++m) {
    term *= -(2 * m - 1) * inv2x2;
    sum += term;
  }
  return sum / (x * std::sqrt(kPi));
}

double cal_f(double x, SeriesControl ctrl) {
  return hyp2f1(0.5, -0.5, 2.5, x, ctrl);
}

double cal_g(double x, double f, SeriesControl ctrl) {
  if (x < 0.0 || x > 1.0) throw std::invalid_argument("cal_g: x outside [0, 1]");
  if (f < 0.5 || f > 1.0)
    throw std::invalid_argument("cal_g: f outside [1/2, 1]");

  double sum = 0.0;
  double xpow = 1.0;
  for (int k = 0; k < ctrl.max_terms; ++k) {
    const double radicand = (1.0 + 2.0 * k) * f + 0.5 - k;
    if (radicand <= 0.0)
      throw std::domain_error("cal_g: non-positive radicand in c_k");
    const double term = xpow / std::sqrt(radicand) *
                        generalized_binomial(0.5, k) *
                        gamma_binomial(1.0, k + 1.5);
    sum += term;
    if (k > 2 && std::abs(term) <= ctrl.rel_tol * std::abs(sum))
      return 0.75 * kPi * sum;
    xpow *= x;
    if (xpow == 0.0) return 0.75 * kPi * sum;
  }
  throw std::runtime_error("cal_g: series did not converge within max_terms");
}

}  // namespace tracedist::specfun
