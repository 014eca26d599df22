#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "maxlab/norms.hpp"
#include "maxlab/rng.hpp"
#include "maxlab/semigroup.hpp"

using namespace maxlab;

TEST_CASE("identity semigroup: contraction ratios exactly 1") {
  const IdentitySemigroup s(FiniteMeasureSpace::counting(4));
  const std::vector<GridFunction> fs = {{1.0, 2.0, 0.0, -1.0}};
  const std::vector<double> ts = {0.0, 1.0, 10.0};
  const ContractionCheck r = check_contraction(s, ts, fs, 1e-12);
  CHECK(r.worst_l1_ratio == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.worst_linf_ratio == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.pass);
}

TEST_CASE("Markov semigroups pass contraction and positivity by construction") {
  Rng rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 8));
    const MarkovSemigroup s(MarkovGenerator::random_symmetric(rng, n));
    std::vector<GridFunction> fs;
    for (int k = 0; k < 3; ++k) {
      GridFunction f(n);
      for (auto& v : f) v = rng.uniform();
      fs.push_back(f);
    }
    const std::vector<double> ts = {0.05, 0.7, 3.0, 20.0};
    CHECK(check_contraction(s, ts, fs, 1e-12).pass);
    CHECK(check_positivity(s, ts, fs, 1e-12).pass);
  }
}

TEST_CASE("identity semigroup positivity") {
  const IdentitySemigroup s(FiniteMeasureSpace::counting(3));
  const std::vector<GridFunction> fs = {{0.0, 1.0, 2.0}};
  const std::vector<double> ts = {1.0};
  CHECK(check_positivity(s, ts, fs, 0.0).pass);
}

TEST_CASE("strong continuity smoke test (finite semigroup)") {
  Rng rng(9);
  const MarkovSemigroup s(MarkovGenerator::random_symmetric(rng, 6));
  GridFunction f(6);
  for (auto& v : f) v = rng.uniform();
  const double nf = lp_norm(s.masses(), std::span<const double>(f), 2.0);
  double prev = 1e300;
  for (double t : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
    const GridFunction tf = s.apply(t, f);
    double d2 = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) d2 += (tf[i] - f[i]) * (tf[i] - f[i]);
    const double d = std::sqrt(d2);
    CHECK(d <= prev + 1e-15);
    prev = d;
  }
  CHECK(prev <= 1e-3 * nf);
}

TEST_CASE("averages default implementation matches integrate") {
  Rng rng(4);
  const MarkovSemigroup s(MarkovGenerator::random_symmetric(rng, 4));
  GridFunction f(4);
  for (auto& v : f) v = rng.uniform(-1.0, 1.0);
  const std::vector<double> alphas = {0.0, 0.5, 2.0};
  const auto avgs = s.averages(alphas, f);
  REQUIRE(avgs.size() == 3);
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(avgs[0][i] == f[i]);
  for (std::size_t a = 1; a < alphas.size(); ++a) {
    const auto direct = s.integrate(alphas[a], f);
    for (std::size_t i = 0; i < f.size(); ++i)
      CHECK(avgs[a][i] == doctest::Approx(direct[i] / alphas[a]).epsilon(1e-15));
  }
}

TEST_CASE("check routines reject empty samples") {
  const IdentitySemigroup s(FiniteMeasureSpace::counting(2));
  const std::vector<GridFunction> none;
  const std::vector<double> ts = {1.0};
  CHECK_THROWS_AS(check_contraction(s, ts, none, 1e-9), std::invalid_argument);
  CHECK_THROWS_AS(check_positivity(s, {}, {{1.0, 1.0}}, 1e-9), std::invalid_argument);
}
