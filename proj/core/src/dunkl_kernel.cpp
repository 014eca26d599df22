#include "maxlab/dunkl_kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace maxlab {

namespace {

constexpr double kSeriesRealCut = 30.0;     // positive z: plain series, no cancellation
constexpr double kSeriesRealNegCut = -4.0;  // alternating below this: eps * e^(2|z|) blows up
constexpr double kSeriesImagCut = 8.0;      // keeps cancellation noise near 3e-13 absolute
constexpr double kAsymptoticCut = 60.0;  // 1F1 argument where the asymptotic takes over

void check_kappa(double kappa) {
  if (!(kappa >= 0.0) || !std::isfinite(kappa))
    throw std::invalid_argument("dunkl_kernel: kappa must be finite and >= 0");
}

// e^(-w) 1F1(a; b; w) for w >= 0 by the positive-term series (w <= ~60).
double scaled_1f1_series(double a, double b, double w) {
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < 500; ++k) {
    term *= (a + k) * w / ((b + k) * (k + 1));
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return std::exp(-w) * sum;
}

// e^(-w) 1F1(a; b; w) ~ (Gamma(b)/Gamma(a)) w^(a-b) 2F0(b-a, 1-a; ; 1/w),
// truncated at the smallest term. Requires a > 0 and large w.
double scaled_1f1_asymptotic(double a, double b, double w) {
  double term = 1.0, sum = 1.0;
  double prev = std::abs(term);
  for (int k = 0; k < 40; ++k) {
    term *= (b - a + k) * (1.0 - a + k) / ((k + 1) * w);
    if (std::abs(term) >= prev) break;  // asymptotic tail started growing
    sum += term;
    prev = std::abs(term);
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  const double logpref = std::lgamma(b) - std::lgamma(a) + (a - b) * std::log(w);
  return std::exp(logpref) * sum;
}

}  // namespace

std::complex<double> dunkl_kernel_series(double kappa, std::complex<double> z,
                                         const SeriesOptions& opts) {
  check_kappa(kappa);
  std::complex<double> term(1.0, 0.0), sum(1.0, 0.0);
  int small_streak = 0;
  for (int k = 0; k < opts.max_terms; ++k) {
    const double denom = (k % 2 == 0) ? (k + 1 + 2.0 * kappa) : (k + 1.0);
    term *= z / denom;
    sum += term;
    // even/odd interleave: require two consecutive negligible terms
    if (std::abs(term) < opts.tol * std::abs(sum)) {
      if (++small_streak >= 2) return sum;
    } else {
      small_streak = 0;
    }
  }
  throw std::domain_error("dunkl_kernel_series: argument too large for tolerance");
}

double dunkl_kernel_scaled(double kappa, double z) {
  check_kappa(kappa);
  if (kappa == 0.0) return std::exp(z - std::abs(z));
  if (z == 0.0) return 1.0;
  const double w = 2.0 * std::abs(z);
  const double a = z > 0.0 ? kappa + 1.0 : kappa;
  const double b = 2.0 * kappa + 1.0;
  if (w <= kAsymptoticCut) return scaled_1f1_series(a, b, w);
  return scaled_1f1_asymptotic(a, b, w);
}

double normalized_bessel_j(double nu, double s) {
  s = std::abs(s);
  if (s < 1e-8) return 1.0 - s * s / (4.0 * (nu + 1.0));
  double j;
  const double m = nu + 0.5;
  if (std::abs(m - std::round(m)) < 1e-12 && std::round(m) >= 0 && std::round(m) <= 8) {
    // half-integer order: trig seed plus upward recurrence (nu << s here)
    const double pref = std::sqrt(2.0 / (M_PI * s));
    double jm = pref * std::cos(s);  // J_{-1/2}
    double jc = pref * std::sin(s);  // J_{+1/2}
    const int m_int = static_cast<int>(std::round(m));
    double order = 0.5;
    for (int i = 1; i < m_int; ++i) {  // m_int = 1 already has jc = J_{1/2}
      const double jn = (2.0 * order / s) * jc - jm;
      jm = jc;
      jc = jn;
      order += 1.0;
    }
    j = m_int == 0 ? jm : jc;
  } else if (nu >= 0.0) {
    j = std::cyl_bessel_j(nu, s);
  } else {
    // reflection for nu in (-1/2, 0)
    const double mu = -nu;
    j = std::cyl_bessel_j(mu, s) * std::cos(mu * M_PI) -
        std::cyl_neumann(mu, s) * std::sin(mu * M_PI);
  }
  return std::exp(std::lgamma(nu + 1.0) + nu * std::log(2.0 / s)) * j;
}

std::complex<double> dunkl_kernel_imag(double kappa, double s) {
  check_kappa(kappa);
  if (kappa == 0.0) return {std::cos(s), std::sin(s)};
  if (std::abs(s) <= kSeriesImagCut)
    return dunkl_kernel_series(kappa, std::complex<double>(0.0, s));
  const double as = std::abs(s);
  const double re = normalized_bessel_j(kappa - 0.5, as);
  const double im = (s / (2.0 * kappa + 1.0)) * normalized_bessel_j(kappa + 0.5, as);
  return {re, im};
}

std::complex<double> dunkl_kernel_rank1(double kappa, double x, std::complex<double> y,
                                        const SeriesOptions& opts) {
  check_kappa(kappa);
  if (!std::isfinite(x) || !std::isfinite(y.real()) || !std::isfinite(y.imag()))
    throw std::invalid_argument("dunkl_kernel_rank1: non-finite argument");
  const std::complex<double> z = x * y;
  if (z == std::complex<double>(0.0, 0.0)) return {1.0, 0.0};  // E(0, y) = 1 exactly
  if (z.imag() == 0.0) {
    const double zr = z.real();
    if (zr <= kSeriesRealCut && zr >= kSeriesRealNegCut)
      return dunkl_kernel_series(kappa, z, opts);
    const double scaled = dunkl_kernel_scaled(kappa, zr);
    const double logval = std::abs(zr) + std::log(scaled);
    if (logval > 709.0)
      throw std::domain_error("dunkl_kernel_rank1: value overflows double range");
    return {std::exp(logval), 0.0};
  }
  if (z.real() == 0.0) return dunkl_kernel_imag(kappa, z.imag());
  return dunkl_kernel_series(kappa, z, opts);  // general complex: capped series only
}

std::complex<double> dunkl_kernel_product(std::span<const double> kappa,
                                          std::span<const double> x,
                                          std::span<const std::complex<double>> y,
                                          const SeriesOptions& opts) {
  if (kappa.size() != x.size() || x.size() != y.size())
    throw std::invalid_argument("dunkl_kernel_product: dimension mismatch");
  std::complex<double> prod(1.0, 0.0);
  for (std::size_t a = 0; a < x.size(); ++a)
    prod *= dunkl_kernel_rank1(kappa[a], x[a], y[a], opts);
  return prod;
}

DunklKernelEvaluator::DunklKernelEvaluator(const RootSystem& rs, SeriesOptions opts)
    : rs_(&rs), opts_(opts) {}

std::complex<double> DunklKernelEvaluator::axis(int axis, double x,
                                                std::complex<double> y) const {
  return dunkl_kernel_rank1(rs_->axis_kappa(axis), x, y, opts_);
}

std::complex<double> DunklKernelEvaluator::operator()(
    std::span<const double> x, std::span<const std::complex<double>> y) const {
  if (static_cast<int>(x.size()) != rs_->dimension())
    throw std::invalid_argument("DunklKernelEvaluator: dimension mismatch");
  std::complex<double> prod(1.0, 0.0);
  for (std::size_t a = 0; a < x.size(); ++a)
    prod *= axis(static_cast<int>(a), x[a], y[a]);
  return prod;
}

}  // namespace maxlab
