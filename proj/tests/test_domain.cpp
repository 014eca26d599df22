#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "maxlab/grid.hpp"
#include "maxlab/norms.hpp"
#include "maxlab/rng.hpp"
#include "maxlab/root_system.hpp"

using namespace maxlab;

TEST_CASE("weight_at: trivial system gives the empty product") {
  const RootSystem rs = RootSystem::trivial(2);
  const double x[] = {0.3, -2.0};
  CHECK(rs.weight_at(x) == 1.0);
}

TEST_CASE("weight_at: rank-1 full-system product") {
  // kappa = 1, R = {+-e1}: |x|^1 * |-x|^1 = x^2
  const RootSystem rs = RootSystem::rank1(1.0);
  const double x[] = {2.0};
  CHECK(rs.weight_at(x) == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("weight_at: vanishes on the hyperplane for positive kappa") {
  const RootSystem rs = RootSystem::rank1(0.5);
  const double x[] = {0.0};
  CHECK(rs.weight_at(x) == 0.0);
}

TEST_CASE("weight_at: kappa = 0 root contributes 1 even at the hyperplane") {
  const RootSystem rs = RootSystem::rank1(0.0);
  const double x[] = {0.0};
  CHECK(rs.weight_at(x) == 1.0);
}

TEST_CASE("gamma_index: half the multiplicity sum over the full system") {
  CHECK(gamma_index(RootSystem::trivial(3)) == 0.0);
  CHECK(gamma_index(RootSystem::rank1(1.0)) == doctest::Approx(1.0));
  CHECK(gamma_index(RootSystem::product_z2({0.5, 1.5})) == doctest::Approx(2.0));
}

TEST_CASE("grid nodes avoid reflection hyperplanes and flip to nodes") {
  const WeightedGrid g(RootSystem::rank1(0.5), 4.0, 32);
  for (int i = 0; i < g.points_per_axis(); ++i) CHECK(g.axis_node(i) != 0.0);
  for (std::size_t j = 0; j < g.size(); ++j) {
    const std::size_t k = g.flip_index(j, 0);
    CHECK(g.node_coord(k, 0) == doctest::Approx(-g.node_coord(j, 0)).epsilon(1e-14));
    CHECK(g.quad_weights()[k] == doctest::Approx(g.quad_weights()[j]).epsilon(1e-14));
  }
}

TEST_CASE("ball_measure: Lebesgue length at kappa = 0") {
  const WeightedGrid g(RootSystem::trivial(1), 4.0, 2048);
  CHECK(ball_measure(g, 1.0) == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("ball_measure: rank-1 kappa = 1 closed form 2/3") {
  // oracle: integral of y^2 over [-1, 1] = 2/3
  const WeightedGrid g(RootSystem::rank1(1.0), 4.0, 2048);
  CHECK(ball_measure(g, 1.0) == doctest::Approx(2.0 / 3.0).epsilon(0.01));
}

TEST_CASE("ball_measure: disc area at kappa = 0, d = 2") {
  const WeightedGrid g(RootSystem::trivial(2), 2.0, 256);
  CHECK(ball_measure(g, 1.0) == doctest::Approx(M_PI).epsilon(0.02));
}

TEST_CASE("ball_measure: scaling law r^(d+2gamma)") {
  const WeightedGrid g(RootSystem::rank1(0.75), 8.0, 1024);
  const double gamma = g.gamma();
  const double lhs = ball_measure(g, 2.0);
  const double rhs = std::pow(2.0, 1.0 + 2.0 * gamma) * ball_measure(g, 1.0);
  CHECK(lhs == doctest::Approx(rhs).epsilon(0.02));
}

TEST_CASE("ball_measure rejects radii beyond the box") {
  const WeightedGrid g(RootSystem::trivial(1), 2.0, 64);
  CHECK_THROWS_AS(ball_measure(g, 3.0), std::invalid_argument);
}

TEST_CASE("lp_norm on finite spaces") {
  const FiniteMeasureSpace s({1.0, 1.0});
  const std::vector<double> f = {3.0, 3.0};
  CHECK(lp_norm(s, f, 1.0) == doctest::Approx(6.0));  // 2|c|

  const FiniteMeasureSpace s2({3.0, 1.0});
  const std::vector<double> ind = {1.0, 0.0};
  CHECK(lp_norm(s2, ind, 2.0) == doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("lp_norm: Gaussian L2 against the sqrt(pi) oracle") {
  // oracle: integral e^(-x^2) dx = sqrt(pi), so ||e^(-x^2/2)||_2 = pi^(1/4)
  const WeightedGrid g(RootSystem::trivial(1), 10.0, 4096);
  GridFunction f(g.size());
  for (std::size_t j = 0; j < g.size(); ++j)
    f[j] = std::exp(-0.5 * g.node_coord(j, 0) * g.node_coord(j, 0));
  CHECK(lp_norm(g, std::span<const double>(f), 2.0) ==
        doctest::Approx(std::pow(M_PI, 0.25)).epsilon(1e-6));
}

TEST_CASE("lp_norm rejects p < 1") {
  const FiniteMeasureSpace s({1.0});
  const std::vector<double> f = {1.0};
  CHECK_THROWS_AS(lp_norm(s, f, 0.5), std::invalid_argument);
}

TEST_CASE("lpq_norm: single component equals lp_norm for every q") {
  const FiniteMeasureSpace s({1.0, 2.0, 0.5});
  const VectorField f = {{1.0, -2.0, 0.3}};
  for (double q : {1.0, 2.0, 7.5}) {
    CHECK(lpq_norm(s, f, 2.5, q) ==
          doctest::Approx(lp_norm(s, std::span<const double>(f[0]), 2.5)).epsilon(1e-14));
  }
}

TEST_CASE("lpq_norm: duplicated component scales by 2^(1/q)") {
  const FiniteMeasureSpace s({1.0, 2.0});
  const VectorField one = {{1.0, 0.5}};
  const VectorField two = {{1.0, 0.5}, {1.0, 0.5}};
  for (double p : {1.0, 3.0})
    CHECK(lpq_norm(s, two, p, 2.0) ==
          doctest::Approx(std::sqrt(2.0) * lpq_norm(s, one, p, 2.0)).epsilon(1e-14));
}

TEST_CASE("lpq_norm: disjoint indicators at p = q") {
  // oracle by direct summation: (m(A) + m(B))^(1/p)
  const FiniteMeasureSpace s({1.0, 2.0, 4.0});
  const VectorField f = {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
  const double p = 3.0;
  CHECK(lpq_norm(s, f, p, p) == doctest::Approx(std::pow(1.0 + 2.0, 1.0 / p)).epsilon(1e-14));
}

TEST_CASE("lpq_norm nonincreasing in q") {
  Rng rng(7);
  const FiniteMeasureSpace s({0.5, 1.0, 2.0, 1.5});
  for (int trial = 0; trial < 20; ++trial) {
    VectorField f;
    for (int c = 0; c < 3; ++c) {
      GridFunction fc(4);
      for (double& v : fc) v = rng.uniform(-1.0, 1.0);
      f.push_back(fc);
    }
    const double p = 1.0 + 3.0 * rng.uniform();
    double prev = lpq_norm(s, f, p, 1.0);
    for (double q : {1.5, 2.0, 4.0, 16.0}) {
      const double cur = lpq_norm(s, f, p, q);
      CHECK(cur <= prev + 1e-12);
      prev = cur;
    }
  }
}

TEST_CASE("distribution: superlevel masses") {
  const FiniteMeasureSpace s({1.0, 2.0});
  const std::vector<double> g = {1.0, 1.0};
  CHECK(distribution(s.masses(), g, 2.0) == 0.0);
  CHECK(distribution(s.masses(), g, 0.5) == 3.0);
}

TEST_CASE("distribution: indicator superlevel set on a grid") {
  const WeightedGrid g(RootSystem::trivial(1), 4.0, 1024);
  GridFunction f(g.size(), 0.0);
  for (std::size_t j = 0; j < g.size(); ++j)
    if (std::abs(g.node_coord(j, 0)) <= 1.0) f[j] = 1.0;
  CHECK(distribution(g.quad_weights(), f, 0.5) == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("Chebyshev: lambda * m({g > lambda}) <= ||g||_1 exactly on finite spaces") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform_int(0, 6));
    std::vector<double> masses(n), g(n);
    for (auto& m : masses) m = 0.1 + rng.uniform();
    for (auto& v : g) v = rng.uniform();
    const double lambda = rng.uniform(0.01, 1.2);
    const FiniteMeasureSpace s(masses);
    CHECK(lambda * distribution(s.masses(), g, lambda) <=
          lp_norm(s, std::span<const double>(g), 1.0) + 1e-15);
  }
}

TEST_CASE("quadrature exactness: degree <= 2 polynomials within C h^2") {
  const WeightedGrid g(RootSystem::trivial(1), 2.0, 256);
  const double h = g.spacing();
  GridFunction f(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double x = g.node_coord(j, 0);
    f[j] = 1.0 + x + x * x;  // integral over [-2,2]: 4 + 0 + 16/3
  }
  // |f| = f here (positive on [-2, 2]); p = 1 norm is the plain integral
  const double exact = 4.0 + 16.0 / 3.0;
  CHECK(std::abs(lp_norm(g, std::span<const double>(f), 1.0) - exact) <= 10.0 * h * h);
}

TEST_CASE("sign-flip invariance of norms and ball measures") {
  const WeightedGrid g(RootSystem::rank1(0.5), 4.0, 128);
  Rng rng(3);
  GridFunction f(g.size());
  for (double& v : f) v = rng.uniform(-1.0, 1.0);
  GridFunction flipped(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) flipped[g.flip_all(j)] = f[j];
  for (double p : {1.0, 2.0, 3.5})
    CHECK(lp_norm(g, std::span<const double>(f), p) ==
          doctest::Approx(lp_norm(g, std::span<const double>(flipped), p)).epsilon(1e-13));
}

TEST_CASE("FiniteMeasureSpace validates masses") {
  CHECK_THROWS_AS(FiniteMeasureSpace({1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteMeasureSpace({}), std::invalid_argument);
}

TEST_CASE("WeightedGrid validates shape") {
  CHECK_THROWS_AS(WeightedGrid(RootSystem::trivial(1), 2.0, 31), std::invalid_argument);
  CHECK_THROWS_AS(WeightedGrid(RootSystem::trivial(1), -1.0, 32), std::invalid_argument);
}
