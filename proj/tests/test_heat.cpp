#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "maxlab/dunkl_heat.hpp"
#include "maxlab/dunkl_operator.hpp"
#include "maxlab/heat.hpp"
#include "maxlab/norms.hpp"
#include "maxlab/sup_grid.hpp"

using namespace maxlab;

namespace {

GridFunction gaussian(const WeightedGrid& g, double sigma) {
  GridFunction f(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    double q = 0.0;
    for (int a = 0; a < g.dimension(); ++a) {
      const double c = g.node_coord(j, a);
      q += c * c;
    }
    f[j] = std::exp(-0.5 * q / (sigma * sigma));
  }
  return f;
}

double rel_l2_err(const WeightedGrid& g, const GridFunction& got, const GridFunction& want) {
  double num = 0.0, den = 0.0;
  const auto w = g.quad_weights();
  for (std::size_t j = 0; j < got.size(); ++j) {
    num += w[j] * (got[j] - want[j]) * (got[j] - want[j]);
    den += w[j] * want[j] * want[j];
  }
  return std::sqrt(num / den);
}

}  // namespace

TEST_CASE("heat_apply conserves interior plateaus") {
  const WeightedGrid g(RootSystem::trivial(1), 8.0, 512);
  const GridFunction ones(g.size(), 1.0);
  const GridFunction out = heat_apply(g, 0.5, ones);
  for (std::size_t j = 0; j < g.size(); ++j)
    if (std::abs(g.node_coord(j, 0)) <= 2.0)
      CHECK(out[j] == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("heat_apply matches the Gaussian convolution closed form") {
  const WeightedGrid g(RootSystem::trivial(1), 8.0, 512);
  const GridFunction f = gaussian(g, 1.0);
  for (double t : {0.1, 0.5, 1.0}) {
    const GridFunction out = heat_apply(g, t, f);
    GridFunction want(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
      const double x = g.node_coord(j, 0);
      want[j] = std::exp(-x * x / (2.0 * (1.0 + 2.0 * t))) / std::sqrt(1.0 + 2.0 * t);
    }
    double worst = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j)
      if (std::abs(g.node_coord(j, 0)) <= 4.0)
        worst = std::max(worst, std::abs(out[j] - want[j]));
    CHECK(worst <= 1e-4);
  }
}

TEST_CASE("heat_apply keeps nonnegative inputs nonnegative and guards the box") {
  const WeightedGrid g(RootSystem::trivial(1), 8.0, 256);
  const GridFunction f = gaussian(g, 0.7);
  const GridFunction out = heat_apply(g, 1.0, f);
  for (double v : out) CHECK(v >= -1e-15);
  CHECK_THROWS_AS(heat_apply(g, 5.0, f), std::domain_error);  // sqrt(t) > L/4
  CHECK_THROWS_AS(heat_apply(g, 0.0, f), std::invalid_argument);
}

TEST_CASE("mehta_constant: Gaussian normalizations") {
  // kappa = 0: (2 pi)^(-1/2)
  const WeightedGrid g0(RootSystem::rank1(0.0), 10.0, 8192);
  CHECK(std::abs(mehta_constant(g0.root_system(), g0) - 1.0 / std::sqrt(2.0 * M_PI)) <= 1e-6);
  // kappa = 1: (2^{3/2} Gamma(3/2))^{-1}; Gamma oracle via tgamma
  const WeightedGrid g1(RootSystem::rank1(1.0), 10.0, 8192);
  CHECK(std::abs(mehta_constant(g1.root_system(), g1) -
                 1.0 / (std::pow(2.0, 1.5) * std::tgamma(1.5))) <= 1e-6);
  // kappa = 0.5: (2 Gamma(1))^{-1} = 0.5
  const WeightedGrid gh(RootSystem::rank1(0.5), 10.0, 8192);
  CHECK(std::abs(mehta_constant(gh.root_system(), gh) - 0.5) <= 1e-6);
}

TEST_CASE("Dunkl heat at kappa = 0 matches the Euclidean semigroup") {
  const WeightedGrid g(RootSystem::rank1(0.0), 8.0, 256);
  const DunklHeatSemigroup dunkl(g);
  const GridFunction f = gaussian(g, 1.0);
  for (double t : {0.2, 1.0}) {
    const GridFunction a = dunkl.apply(t, f);
    const GridFunction b = heat_apply(g, t, f);
    double worst = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) worst = std::max(worst, std::abs(a[j] - b[j]));
    CHECK(worst <= 1e-8);
  }
}

TEST_CASE("Dunkl heat: t = 0 is exactly the identity") {
  const WeightedGrid g(RootSystem::rank1(0.5), 8.0, 128);
  const DunklHeatSemigroup dunkl(g);
  const GridFunction f = gaussian(g, 1.0);
  const GridFunction out = dunkl.apply(0.0, f);
  for (std::size_t j = 0; j < f.size(); ++j) CHECK(out[j] == f[j]);
}

TEST_CASE("Dunkl heat kernel is strictly positive across sign pairs") {
  const WeightedGrid g(RootSystem::rank1(0.5), 8.0, 64);
  const DunklHeatSemigroup dunkl(g);
  for (double t : {0.05, 0.5, 2.0}) {
    for (std::size_t i = 0; i < g.size(); i += 7)
      for (std::size_t j = 0; j < g.size(); j += 11)
        CHECK(dunkl.kernel_value(i, j, t) > 0.0);
  }
}

TEST_CASE("Dunkl heat mass stays in [1 - tol, 1] on the guarded region") {
  const WeightedGrid g(RootSystem::rank1(0.5), 8.0, 512);
  const DunklHeatSemigroup dunkl(g);
  const GridFunction ones(g.size(), 1.0);
  const double t_cap = (g.half_width() / 8.0) * (g.half_width() / 8.0);
  for (double t : {0.05, 0.3, t_cap}) {
    const GridFunction out = dunkl.apply(t, ones);
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (std::abs(g.node_coord(j, 0)) > g.half_width() / 4.0) continue;
      CHECK(out[j] <= 1.0 + 1e-6);  // quadrature guard on the strict continuum bound
      CHECK(out[j] >= 1.0 - 1e-3);
    }
  }
}

TEST_CASE("semigroup law within quadrature tolerance") {
  for (double kappa : {0.0, 0.5, 1.0}) {
    const WeightedGrid g(RootSystem::rank1(kappa), 8.0, 256);
    const DunklHeatSemigroup dunkl(g);
    const GridFunction f = gaussian(g, 0.8);
    const GridFunction ab = dunkl.apply(0.7, dunkl.apply(0.5, f));
    const GridFunction c = dunkl.apply(1.2, f);
    CHECK(rel_l2_err(g, ab, c) <= 1e-3);
  }
}

TEST_CASE("strong continuity smoke test down to t = 1e-6") {
  const WeightedGrid g(RootSystem::rank1(0.5), 8.0, 256);
  const DunklHeatSemigroup dunkl(g);
  const GridFunction f = gaussian(g, 1.0);
  const double nf = lp_norm(g, std::span<const double>(f), 2.0);
  double prev = 1e300;
  for (double t : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
    const GridFunction tf = dunkl.apply(t, f);
    double num = 0.0;
    const auto w = g.quad_weights();
    for (std::size_t j = 0; j < f.size(); ++j) num += w[j] * (tf[j] - f[j]) * (tf[j] - f[j]);
    const double d = std::sqrt(num);
    CHECK(d <= prev * (1.0 + 1e-12));
    prev = d;
  }
  CHECK(prev <= 1e-3 * nf);
}

TEST_CASE("heat equation residual shrinks under refinement") {
  for (double kappa : {0.0, 0.5, 1.0}) {
    double prev_residual = 1e300;
    for (int level = 0; level < 2; ++level) {
      const int n = 128 << level;
      const WeightedGrid g(RootSystem::rank1(kappa), 8.0, n);
      const DunklHeatSemigroup dunkl(g);
      const GridFunction f = gaussian(g, 1.0);
      const double t = 0.5;
      const double delta = level == 0 ? 2e-3 : 1e-3;
      const GridFunction ht = dunkl.apply(t, f);
      const GridFunction htd = dunkl.apply(t + delta, f);
      const GridFunction lap = dunkl_laplacian(g, ht);
      GridFunction resid(g.size());
      for (std::size_t j = 0; j < g.size(); ++j)
        resid[j] = (htd[j] - ht[j]) / delta - lap[j];
      double worst = 0.0;
      for (std::size_t j = 0; j < g.size(); ++j)
        if (std::abs(g.node_coord(j, 0)) <= 3.0) worst = std::max(worst, std::abs(resid[j]));
      CHECK(worst < prev_residual);
      prev_residual = worst;
      CHECK(worst <= 0.05);  // O(delta) + O(h^2) at these scales
    }
  }
}

TEST_CASE("integrate: trapezoid endpoints against a hand sum") {
  const WeightedGrid g(RootSystem::rank1(0.0), 8.0, 128);
  const SupGrid tsup = SupGrid::geometric(SupGrid::Kind::time, 0.05, 0.8, 2.0, true);
  const DunklHeatSemigroup dunkl(g, tsup.nodes());
  const GridFunction f = gaussian(g, 1.0);
  const auto nodes = tsup.nodes();  // 0.05, 0.1, 0.2, 0.4, 0.8
  const double alpha = nodes[2];
  const GridFunction got = dunkl.integrate(alpha, f);
  // trapezoid over {0, nodes[0], nodes[1], nodes[2]} with H_0 f = f
  GridFunction want(g.size(), 0.0);
  GridFunction prev = f;
  double tprev = 0.0;
  for (std::size_t k = 0; k <= 2; ++k) {
    const GridFunction cur = dunkl.apply(nodes[k], f);
    for (std::size_t j = 0; j < g.size(); ++j)
      want[j] += 0.5 * (nodes[k] - tprev) * (prev[j] + cur[j]);
    prev = cur;
    tprev = nodes[k];
  }
  for (std::size_t j = 0; j < g.size(); ++j)
    CHECK(got[j] == doctest::Approx(want[j]).epsilon(1e-12));
}
