#include "tracedist/predictions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tracedist/combinatorics.hpp"

namespace tracedist::pred {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2 = 0.69314718055994530942;

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

// Exact integer sum / 2^(n * n_total) -> double. The double conversion is the
// only rounding step.
double ratio_to_pow2(const comb::BigInt& numerator, int log2_denominator) {
  if (log2_denominator > 900)
    throw std::invalid_argument("moment: n * n_total too large for double range");
  return std::ldexp(numerator.convert_to<double>(), -log2_denominator);
}

}  // namespace

Bipartition::Bipartition(int n_total_, int n_b_) : n_total(n_total_), n_b(n_b_) {
  if (n_total < 1) throw std::invalid_argument("Bipartition: n_total must be >= 1");
  if (n_b < 0 || n_b > n_total)
    throw std::invalid_argument("Bipartition: n_b outside 0..n_total");
}

double Bipartition::dim_a() const { return std::exp2(n_a()); }
double Bipartition::dim_b() const { return std::exp2(n_b); }
double Bipartition::dim() const { return std::exp2(n_total); }
double Bipartition::x() const { return std::exp2(n_a() - n_b - 1); }

double spectral_density(double q, double gamma, int n_sites) {
  if (n_sites < 1 || gamma <= 0.0)
    throw std::invalid_argument("spectral_density: needs n_sites >= 1, gamma > 0");
  const double var = gamma * gamma * n_sites;
  return std::exp(-q * q / (2.0 * var)) / std::sqrt(2.0 * kPi * var);
}

double page_trace_distance_from_x(double x, SeriesControl ctrl) {
  if (x <= 0.0) throw std::invalid_argument("page_trace_distance: x must be > 0");
  if (x >= 1.0) return clamp01(1.0 - 1.0 / (4.0 * x));
  return clamp01(8.0 * std::sqrt(x) / (3.0 * kPi) * specfun::cal_f(x, ctrl));
}

double page_trace_distance(const Bipartition& part, SeriesControl ctrl) {
  return page_trace_distance_from_x(part.x(), ctrl);
}

double schatten_n_page_average(int n, const Bipartition& part) {
  if (n < 1) throw std::invalid_argument("schatten_n_page_average: n must be >= 1");
  if (n % 2 != 0)
    throw std::domain_error("schatten_n_page_average: odd-n averages vanish");
  comb::BigInt sum = 0;
  for (int k = 1; k <= n / 2; ++k) {
    comb::BigInt term = comb::even_narayana(n, k);
    term <<= k;                                       // 2^k
    term <<= part.n_a() * (n - k + 1) + part.n_b * k; // D_A^{n-k+1} D_B^k
    sum += term;
  }
  return ratio_to_pow2(sum, n * part.n_total);
}

double schatten_n_distance_average(int n, const Bipartition& part) {
  return 0.5 * schatten_n_page_average(n, part);
}

double page_moment_trace_rho_n(int n, const Bipartition& part) {
  if (n < 1) throw std::invalid_argument("page_moment_trace_rho_n: n must be >= 1");
  comb::BigInt sum = 0;
  for (int k = 1; k <= n; ++k) {
    comb::BigInt term = comb::narayana(n, k);
    term <<= part.n_a() * (n - k + 1) + part.n_b * k;
    sum += term;
  }
  return ratio_to_pow2(sum, n * part.n_total);
}

double charge_q0_trace_distance(const Bipartition& part, SeriesControl ctrl) {
  if (part.n_b == 0 || part.n_b == part.n_total)
    throw std::domain_error(
        "charge_q0_trace_distance: degenerate partition (n_b in {0, n_total})");
  const double f = part.f();
  const double x = part.x();
  if (part.n_a() > part.n_b)
    return clamp01(1.0 - 1.0 / (4.0 * x * std::sqrt(2.0 * f)));
  const double xf = x * std::sqrt(f / (1.0 - f));
  return clamp01(8.0 * std::sqrt(xf) / (3.0 * kPi) * specfun::cal_g(xf, f, ctrl));
}

double charge_general_trace_distance(const Bipartition& part,
                                     const ChargeModel& cm, SeriesControl ctrl) {
  if (part.n_b == 0 || part.n_b == part.n_total)
    throw std::domain_error(
        "charge_general_trace_distance: degenerate partition");
  if (cm.gamma <= 0.0)
    throw std::invalid_argument("charge_general_trace_distance: gamma must be > 0");

  const int na = part.n_a();
  const int nb = part.n_b;
  const double da = part.dim_a();
  const double db = part.dim_b();
  const double f_total = part.dim() * spectral_density(cm.q_total, cm.gamma, part.n_total);

  // Q_A runs on the A-subsystem lattice (integer steps, offset -n_a/2 for the
  // centered Hamming convention), wide enough to cover both Gaussian peaks.
  const double reach = 8.0 * cm.gamma * std::sqrt(part.n_total);
  const double lo = std::min(0.0, cm.q_total) - reach;
  const double hi = std::max(0.0, cm.q_total) + reach;
  const double offset = -0.5 * na;
  const long w_lo = static_cast<long>(std::floor(lo - offset)) - 1;
  const long w_hi = static_cast<long>(std::ceil(hi - offset)) + 1;

  double sum = 0.0;
  for (long w = w_lo; w <= w_hi; ++w) {
    const double qa = offset + static_cast<double>(w);
    const double qb = cm.q_total - qa;
    const double fa = da * spectral_density(qa, cm.gamma, na);
    const double fb = db * spectral_density(qb, cm.gamma, nb);
    if (fa == 0.0 && fb == 0.0) continue;
    const double x = fa / (2.0 * fb);
    if (x >= 1.0) {
      sum += fa * fb - 0.5 * fb * fb;
    } else {
      sum += 4.0 * std::sqrt(2.0) / (3.0 * kPi) * fa * std::sqrt(fa * fb) *
             specfun::cal_f(x, ctrl);
    }
  }
  return clamp01(sum / f_total);
}

double charge_half_partition_closed(int n_total, const ChargeModel& cm,
                                    SeriesControl ctrl) {
  if (n_total < 2 || n_total % 2 != 0)
    throw std::invalid_argument("charge_half_partition_closed: n_total must be even");
  if (cm.q_total == 0.0)
    throw std::domain_error(
        "charge_half_partition_closed: Q = 0 is singular; use charge_q0_trace_distance");
  if (cm.gamma <= 0.0)
    throw std::invalid_argument("charge_half_partition_closed: gamma must be > 0");

  const double n = n_total;
  const double g2 = cm.gamma * cm.gamma;
  const double q = std::abs(cm.q_total);
  const double c = g2 * kLn2;
  const double s = std::sqrt(2.0 * g2 * n);

  double total = 0.5 * std::erfc(std::sqrt(n / (2.0 * g2)) * c / q);
  // exp(Q^2/(2 g^2 N)) erfc((NC+Q^2)/(Q s)) rewritten through erfcx:
  // the exponent difference is exactly -ln2 - N C^2 / (2 g^2 Q^2).
  total -= 0.125 * std::exp(-n * c * c / (2.0 * g2 * q * q)) *
           specfun::erfcx((n * c + q * q) / (q * s));

  // Series term k: binomials * [exp((k+1/2) Q^2/(2 g^2 N))/2]^(k+1/2)
  //                * erfc(((1+2k) Q^2 - 2NC)/(2 Q s)).
  // For z > 0 the bracket and erfc are combined through erfcx; the combined
  // exponent collapses to the k-independent -N C^2 / (2 g^2 Q^2).
  const double diff_exp = std::exp(-n * c * c / (2.0 * g2 * q * q));
  double series = 0.0;
  bool converged = false;
  for (int k = 0; k < ctrl.max_terms; ++k) {
    const double kh = k + 0.5;
    const double z = ((1.0 + 2.0 * k) * q * q - 2.0 * n * c) / (2.0 * q * s);
    const double binoms = specfun::generalized_binomial(0.5, k) *
                          specfun::gamma_binomial(1.0, k + 1.5);
    double term;
    if (z > 0.0) {
      term = binoms * diff_exp * specfun::erfcx(z);
    } else {
      const double log_bracket = kh * (kh * q * q / (2.0 * g2 * n) - kLn2);
      term = binoms * std::exp(log_bracket) * std::erfc(z);
    }
    series += term;
    if (k > 8 && std::abs(term) <= ctrl.rel_tol * (std::abs(series) + 1.0)) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw std::runtime_error(
        "charge_half_partition_closed: series did not converge within max_terms");
  return clamp01(total + series);
}

double discrimination_probability(double d1) {
  if (d1 < 0.0 || d1 > 1.0)
    throw std::domain_error("discrimination_probability: d1 outside [0, 1]");
  return 0.5 * (1.0 + d1);
}

}  // namespace tracedist::pred
