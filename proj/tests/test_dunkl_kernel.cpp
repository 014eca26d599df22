#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "maxlab/dunkl_kernel.hpp"
#include "maxlab/rng.hpp"
#include "maxlab/root_system.hpp"

using namespace maxlab;

namespace {

// Independent oracle: RK4 on the even/odd system u' = y v, v' = y u - 2k v/x
// from x0 ~ 0 (local solution u = 1 + (yx)^2/(2(1+2k)), v = yx/(1+2k)) to x.
// E_k(x, y) = u(x) + v(x) for real arguments.
double kernel_ode_oracle(double kappa, double x, double y) {
  const double x0 = 1e-4;
  const int steps = 20000;
  const double h = (x - x0) / steps;
  double u = 1.0 + (y * x0) * (y * x0) / (2.0 * (1.0 + 2.0 * kappa));
  double v = y * x0 / (1.0 + 2.0 * kappa);
  double t = x0;
  const auto du = [&](double uu, double vv, double tt) {
    (void)uu;
    (void)tt;
    return y * vv;
  };
  const auto dv = [&](double uu, double vv, double tt) {
    return y * uu - 2.0 * kappa * vv / tt;
  };
  for (int i = 0; i < steps; ++i) {
    const double k1u = du(u, v, t), k1v = dv(u, v, t);
    const double k2u = du(u + 0.5 * h * k1u, v + 0.5 * h * k1v, t + 0.5 * h);
    const double k2v = dv(u + 0.5 * h * k1u, v + 0.5 * h * k1v, t + 0.5 * h);
    const double k3u = du(u + 0.5 * h * k2u, v + 0.5 * h * k2v, t + 0.5 * h);
    const double k3v = dv(u + 0.5 * h * k2u, v + 0.5 * h * k2v, t + 0.5 * h);
    const double k4u = du(u + h * k3u, v + h * k3v, t + h);
    const double k4v = dv(u + h * k3u, v + h * k3v, t + h);
    u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    t += h;
  }
  return u + v;
}

}  // namespace

TEST_CASE("E(0, y) = 1 exactly") {
  for (double kappa : {0.0, 0.5, 1.0, 2.7}) {
    CHECK(dunkl_kernel_rank1(kappa, 0.0, {3.0, 0.0}) == std::complex<double>(1.0, 0.0));
    CHECK(dunkl_kernel_rank1(kappa, 0.0, {0.0, 5.0}) == std::complex<double>(1.0, 0.0));
    CHECK(dunkl_kernel_rank1(kappa, 2.0, {0.0, 0.0}) == std::complex<double>(1.0, 0.0));
  }
}

TEST_CASE("kappa = 0 reduces to the exponential on [-5,5]^2") {
  Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    const double x = rng.uniform(-5.0, 5.0);
    const double y = rng.uniform(-5.0, 5.0);
    const auto e = dunkl_kernel_rank1(0.0, x, {y, 0.0});
    CHECK(std::abs(e.real() - std::exp(x * y)) <= 1e-10 * std::exp(x * y));
    CHECK(e.imag() == 0.0);
    const auto ei = dunkl_kernel_rank1(0.0, x, {0.0, y});
    CHECK(std::abs(ei - std::exp(std::complex<double>(0.0, x * y))) <= 1e-10);
  }
}

TEST_CASE("E_1(1,1) = cosh(1) against the ODE oracle") {
  const double oracle = kernel_ode_oracle(1.0, 1.0, 1.0);
  CHECK(oracle == doctest::Approx(std::cosh(1.0)).epsilon(1e-9));  // oracle confirmed
  const auto e = dunkl_kernel_rank1(1.0, 1.0, {1.0, 0.0});
  CHECK(std::abs(e.real() - std::cosh(1.0)) <= 1e-8);
  CHECK(std::abs(e.real() - oracle) <= 1e-8);
}

TEST_CASE("series matches the ODE oracle for generic kappa and arguments") {
  for (double kappa : {0.3, 0.5, 1.7}) {
    for (double y : {0.5, 1.0, -2.0}) {
      const double oracle = kernel_ode_oracle(kappa, 1.5, y);
      const auto e = dunkl_kernel_rank1(kappa, 1.5, {y, 0.0});
      CHECK(e.real() == doctest::Approx(oracle).epsilon(1e-8));
    }
  }
}

TEST_CASE("kernel symmetry in (x, y) for real arguments") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const double k = rng.uniform(0.0, 2.0);
    const double x = rng.uniform(-3.0, 3.0);
    const double y = rng.uniform(-3.0, 3.0);
    const auto a = dunkl_kernel_rank1(k, x, {y, 0.0});
    const auto b = dunkl_kernel_rank1(k, y, {x, 0.0});
    CHECK(std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a)));
  }
}

TEST_CASE("|E(ix, y)| <= 1 + 1e-9 on [-10,10]^2") {
  Rng rng(77);
  for (int i = 0; i < 400; ++i) {
    const double k = rng.uniform(0.0, 2.0);
    const double x = rng.uniform(-10.0, 10.0);
    const double y = rng.uniform(-10.0, 10.0);
    const auto e = dunkl_kernel_rank1(k, x, {0.0, y});
    CHECK(std::abs(e) <= 1.0 + 1e-9);
  }
}

TEST_CASE("scaled evaluator is continuous across the series/asymptotic cut") {
  for (double kappa : {0.25, 0.5, 1.0, 1.5}) {
    for (double sign : {1.0, -1.0}) {
      // straddle the w = 2|z| = 60 route cut with a step small enough that
      // the function's own slope is negligible
      const double a = dunkl_kernel_scaled(kappa, sign * (30.0 - 1e-6));
      const double b = dunkl_kernel_scaled(kappa, sign * (30.0 + 1e-6));
      CHECK(std::abs(a - b) / a <= 1e-6);
    }
    // against the plain series where it is stable: positive z, and small |z|
    // on the alternating side
    const auto pos = dunkl_kernel_series(kappa, {25.0, 0.0});
    CHECK(dunkl_kernel_scaled(kappa, 25.0) ==
          doctest::Approx(pos.real() * std::exp(-25.0)).epsilon(1e-11));
    const auto neg = dunkl_kernel_series(kappa, {-3.0, 0.0});
    CHECK(dunkl_kernel_scaled(kappa, -3.0) ==
          doctest::Approx(neg.real() * std::exp(-3.0)).epsilon(1e-11));
  }
}

TEST_CASE("imaginary route: Bessel backend agrees with the series overlap") {
  for (double kappa : {0.25, 0.5, 1.0, 2.0}) {
    for (double s : {8.0, 9.5, -8.5}) {
      const auto series = dunkl_kernel_series(kappa, {0.0, s});
      const auto bessel = dunkl_kernel_imag(kappa, s);
      CHECK(std::abs(series - bessel) <= 2e-11);
    }
  }
}

TEST_CASE("large real arguments stay finite through the scaled route") {
  const auto e = dunkl_kernel_rank1(0.5, 10.0, {20.0, 0.0});  // z = 200
  CHECK(std::isfinite(e.real()));
  CHECK(e.real() > 0.0);
  // against log-domain reference: log E = |z| + log S
  const double logref = 200.0 + std::log(dunkl_kernel_scaled(0.5, 200.0));
  CHECK(std::log(e.real()) == doctest::Approx(logref).epsilon(1e-12));
}

TEST_CASE("overflow and unsupported-argument errors") {
  CHECK_THROWS_AS(dunkl_kernel_rank1(0.5, 30.0, {30.0, 0.0}), std::domain_error);  // e^900
  CHECK_THROWS_AS(dunkl_kernel_rank1(0.5, 50.0, {40.0, 40.0}), std::domain_error);
  CHECK_THROWS_AS(dunkl_kernel_rank1(-1.0, 1.0, {1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("product kernel tensorizes") {
  const std::vector<double> zero = {0.0, 0.0};
  const std::vector<double> x = {0.7, -1.2};
  const std::vector<std::complex<double>> y = {{0.4, 0.0}, {2.0, 0.0}};
  const auto e0 = dunkl_kernel_product(zero, x, y);
  CHECK(e0.real() == doctest::Approx(std::exp(0.7 * 0.4 - 1.2 * 2.0)).epsilon(1e-12));

  const std::vector<double> ones = {1.0, 1.0};
  const std::vector<double> x1 = {1.0, 1.0};
  const std::vector<std::complex<double>> y1 = {{1.0, 0.0}, {1.0, 0.0}};
  const auto e1 = dunkl_kernel_product(ones, x1, y1);
  CHECK(e1.real() == doctest::Approx(std::cosh(1.0) * std::cosh(1.0)).epsilon(1e-7));

  const std::vector<double> x0 = {0.0, 0.0};
  CHECK(dunkl_kernel_product(ones, x0, y1) == std::complex<double>(1.0, 0.0));
}

TEST_CASE("evaluator bound to a root system") {
  const RootSystem rs = RootSystem::product_z2({1.0, 1.0});
  const DunklKernelEvaluator ev(rs);
  const std::vector<double> x = {1.0, 1.0};
  const std::vector<std::complex<double>> y = {{1.0, 0.0}, {1.0, 0.0}};
  CHECK(ev(x, y).real() == doctest::Approx(std::cosh(1.0) * std::cosh(1.0)).epsilon(1e-7));
}

TEST_CASE("normalized Bessel J: trig closed forms at half-integer order") {
  for (double s : {12.0, 40.0, 250.0}) {
    CHECK(normalized_bessel_j(-0.5, s) == doctest::Approx(std::cos(s)).epsilon(1e-10));
    CHECK(normalized_bessel_j(0.5, s) == doctest::Approx(std::sin(s) / s).epsilon(1e-10));
    const double j32 = 3.0 * (std::sin(s) / (s * s * s) - std::cos(s) / (s * s));
    CHECK(normalized_bessel_j(1.5, s) == doctest::Approx(j32).epsilon(1e-9));
  }
}
