#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "maxlab/markov.hpp"
#include "maxlab/rng.hpp"

using namespace maxlab;

namespace {

SquareMatrix two_state_chain() {
  SquareMatrix q(2);
  q(0, 0) = -1.0;
  q(0, 1) = 1.0;
  q(1, 0) = 1.0;
  q(1, 1) = -1.0;
  return q;
}

// adaptive Simpson oracle, independent of the phi1 series
template <typename F>
std::vector<double> simpson_vec(const F& f, double a, double b, std::size_t n) {
  const auto fa = f(a), fm = f(0.5 * (a + b)), fb = f(b);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (b - a) / 6.0 * (fa[i] + 4.0 * fm[i] + fb[i]);
  return out;
}

template <typename F>
std::vector<double> adaptive_quadrature(const F& f, double a, double b, std::size_t n,
                                        double tol, int depth = 0) {
  const auto whole = simpson_vec(f, a, b, n);
  const auto left = simpson_vec(f, a, 0.5 * (a + b), n);
  const auto right = simpson_vec(f, 0.5 * (a + b), b, n);
  double err = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    err = std::max(err, std::abs(left[i] + right[i] - whole[i]));
  if (err < tol || depth > 24) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = left[i] + right[i];
    return out;
  }
  const auto l = adaptive_quadrature(f, a, 0.5 * (a + b), n, 0.5 * tol, depth + 1);
  const auto r = adaptive_quadrature(f, 0.5 * (a + b), b, n, 0.5 * tol, depth + 1);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = l[i] + r[i];
  return out;
}

}  // namespace

TEST_CASE("markov_apply: zero generator is the identity semigroup") {
  const MarkovGenerator q(SquareMatrix(3));
  const std::vector<double> f = {1.0, -2.0, 0.5};
  for (double t : {0.0, 0.3, 10.0}) {
    const auto out = markov_apply(q, t, f);
    for (std::size_t i = 0; i < f.size(); ++i)
      CHECK(out[i] == doctest::Approx(f[i]).epsilon(1e-14));
  }
}

TEST_CASE("markov_apply: 2-state chain against the eigendecomposition oracle") {
  const MarkovGenerator q(two_state_chain());
  const std::vector<double> f = {1.0, 0.0};
  for (double t : {0.01, 0.5, 2.0, 37.0}) {
    const auto out = markov_apply(q, t, f);
    CHECK(out[0] == doctest::Approx(0.5 * (1.0 + std::exp(-2.0 * t))).epsilon(1e-12));
    CHECK(out[1] == doctest::Approx(0.5 * (1.0 - std::exp(-2.0 * t))).epsilon(1e-12));
  }
}

TEST_CASE("markov_apply: positivity and double substochasticity") {
  Rng rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 7));
    const MarkovGenerator q = MarkovGenerator::random_symmetric(rng, n);
    for (double t : {0.1, 1.0, 8.0}) {
      SquareMatrix e(n);
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<double> basis(n, 0.0);
        basis[j] = 1.0;
        const auto col = markov_apply(q, t, basis);
        for (std::size_t i = 0; i < n; ++i) e(i, j) = col[i];
      }
      for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0, col = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          CHECK(e(i, j) >= -1e-13);
          row += e(i, j);
          col += e(j, i);
        }
        CHECK(row <= 1.0 + 1e-12);
        CHECK(col <= 1.0 + 1e-12);
      }
    }
  }
}

TEST_CASE("markov_integral: zero generator gives alpha * f") {
  const MarkovGenerator q(SquareMatrix(2));
  const std::vector<double> f = {2.0, -1.0};
  const auto out = markov_integral(q, 3.5, f);
  CHECK(out[0] == doctest::Approx(7.0).epsilon(1e-13));
  CHECK(out[1] == doctest::Approx(-3.5).epsilon(1e-13));
}

TEST_CASE("markov_integral: 2-state closed form from termwise integration") {
  const MarkovGenerator q(two_state_chain());
  const std::vector<double> f = {1.0, 0.0};
  for (double a : {0.2, 1.0, 5.0}) {
    const auto out = markov_integral(q, a, f);
    const double osc = 0.25 * (1.0 - std::exp(-2.0 * a));
    CHECK(out[0] == doctest::Approx(0.5 * a + osc).epsilon(1e-11));
    CHECK(out[1] == doctest::Approx(0.5 * a - osc).epsilon(1e-11));
  }
}

TEST_CASE("markov_integral: (1/alpha) integral -> f as alpha -> 0") {
  // the deviation is (alpha/2) Q f + O(alpha^2); at alpha = 1e-6 the pinned
  // 1e-8 needs |Qf| <= 2e-2, so pin it on a small-norm chain
  SquareMatrix small(2);
  small(0, 0) = -0.002;
  small(0, 1) = 0.002;
  small(1, 0) = 0.002;
  small(1, 1) = -0.002;
  const MarkovGenerator qs{std::move(small)};
  const double alpha = 1e-6;
  const std::vector<double> f0 = {1.0, -0.5};
  const auto out0 = markov_integral(qs, alpha, f0);
  for (std::size_t i = 0; i < f0.size(); ++i) CHECK(std::abs(out0[i] / alpha - f0[i]) <= 1e-8);

  // generic generators converge at the O(alpha ||Q|| ||f||) rate
  Rng rng(5);
  const MarkovGenerator q = MarkovGenerator::random_symmetric(rng, 5);
  std::vector<double> f(5);
  for (auto& v : f) v = rng.uniform(-1.0, 1.0);
  const auto out = markov_integral(q, alpha, f);
  const double rate = alpha * q.matrix().norm_inf();
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(std::abs(out[i] / alpha - f[i]) <= rate);
}

TEST_CASE("markov_integral agrees with adaptive quadrature of markov_apply") {
  Rng rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    const MarkovGenerator q = MarkovGenerator::random_symmetric(rng, 4);
    std::vector<double> f(4);
    for (auto& v : f) v = rng.uniform(-1.0, 1.0);
    const double alpha = rng.uniform(0.3, 4.0);
    const auto oracle = adaptive_quadrature(
        [&](double t) { return markov_apply(q, t, f); }, 0.0, alpha, 4, 1e-11);
    const auto got = markov_integral(q, alpha, f);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(std::abs(got[i] - oracle[i]) <= 1e-8);
  }
}

TEST_CASE("semigroup law is exact for the matrix exponential") {
  Rng rng(31);
  const MarkovGenerator q = MarkovGenerator::random_symmetric(rng, 6);
  std::vector<double> f(6);
  for (auto& v : f) v = rng.uniform(-1.0, 1.0);
  for (double s : {0.1, 1.3}) {
    for (double t : {0.4, 2.2}) {
      const auto ab = markov_apply(q, t, markov_apply(q, s, f));
      const auto c = markov_apply(q, t + s, f);
      for (std::size_t i = 0; i < f.size(); ++i) CHECK(std::abs(ab[i] - c[i]) <= 1e-12);
    }
  }
}

TEST_CASE("MarkovGenerator validates the sign structure") {
  SquareMatrix neg(2);
  neg(0, 1) = -0.5;
  CHECK_THROWS_AS(MarkovGenerator{neg}, std::invalid_argument);

  SquareMatrix possum(2);
  possum(0, 0) = 0.5;  // row sum > 0
  CHECK_THROWS_AS(MarkovGenerator{possum}, std::invalid_argument);
}

TEST_CASE("markov_apply rejects bad input") {
  const MarkovGenerator q(SquareMatrix(2));
  CHECK_THROWS_AS(markov_apply(q, -1.0, std::vector<double>{1.0, 2.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(markov_apply(q, 1.0, std::vector<double>{1.0, std::nan("")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(markov_integral(q, 0.0, std::vector<double>{1.0, 2.0}),
                  std::invalid_argument);
}
