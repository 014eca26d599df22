#pragma once

#include <complex>
#include <span>

#include "maxlab/root_system.hpp"

namespace maxlab {

struct SeriesOptions {
  double tol = 1e-15;   // stop when |term| < tol * |partial sum|
  int max_terms = 2000; // exceeded -> argument too large for this route
};

/// Power-series solution of the rank-1 eigenproblem, as a function of the
/// product z = x*y: a0 = 1, a_{2n+1} = z a_{2n} / (2n+1+2k),
/// a_{2n+2} = z a_{2n+1} / (2n+2). Accurate for moderate |z|; large real z
/// overflows and large imaginary z cancels, so callers dispatch (see
/// dunkl_kernel_rank1).
std::complex<double> dunkl_kernel_series(double kappa, std::complex<double> z,
                                         const SeriesOptions& opts = {});

/// e^(-|z|) E_kappa(z) for real z, stable at every magnitude. Positive.
double dunkl_kernel_scaled(double kappa, double z);

/// E_kappa at the purely imaginary product i*s (real arguments of E(ix, y)).
/// Modulus <= 1; backed by Bessel J for large |s|.
std::complex<double> dunkl_kernel_imag(double kappa, double s);

/// Gamma(nu+1) (2/s)^nu J_nu(s), normalized so the value at 0 is 1.
double normalized_bessel_j(double nu, double s);

/// Rank-1 Dunkl kernel E_kappa(x, y) for real x and real-or-imaginary y,
/// dispatching between the series and the stable large-argument routes.
/// Throws std::domain_error when no route can represent the value (general
/// complex y with both parts large, or real overflow past 1e308).
std::complex<double> dunkl_kernel_rank1(double kappa, double x, std::complex<double> y,
                                        const SeriesOptions& opts = {});

/// Product kernel for Z2^d: per-axis rank-1 factors.
std::complex<double> dunkl_kernel_product(std::span<const double> kappa,
                                          std::span<const double> x,
                                          std::span<const std::complex<double>> y,
                                          const SeriesOptions& opts = {});

/// Kernel evaluation bound to a root system (trivial, rank-1 or Z2^d).
class DunklKernelEvaluator {
 public:
  explicit DunklKernelEvaluator(const RootSystem& rs, SeriesOptions opts = {});

  std::complex<double> axis(int axis, double x, std::complex<double> y) const;
  std::complex<double> operator()(std::span<const double> x,
                                  std::span<const std::complex<double>> y) const;

 private:
  const RootSystem* rs_;
  SeriesOptions opts_;
};

}  // namespace maxlab
