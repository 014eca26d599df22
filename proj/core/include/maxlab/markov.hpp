#pragma once

#include <span>
#include <vector>

#include "maxlab/rng.hpp"

namespace maxlab {

/// Minimal dense square matrix, just enough for the finite-state experiments.
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}
  static SquareMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  SquareMatrix operator*(const SquareMatrix& rhs) const;
  std::vector<double> apply(std::span<const double> v) const;
  double norm_inf() const;  // max absolute row sum

 private:
  std::size_t n_;
  std::vector<double> a_;
};

/// e^A by scaling and squaring with a full Taylor tail (n is tiny here).
SquareMatrix matrix_exp(const SquareMatrix& a);

/// phi1(A) = sum_k A^k / (k+1)!, so that integral_0^alpha e^(tA) dt =
/// alpha * phi1(alpha A). Defined for singular A (conservative generators).
SquareMatrix matrix_phi1(const SquareMatrix& a);

/// Generator of a positive L1/Linf-contraction semigroup on n states:
/// nonnegative off-diagonal, row sums <= 0, column sums <= 0. Then e^(tQ)
/// is entrywise nonnegative and doubly substochastic.
class MarkovGenerator {
 public:
  explicit MarkovGenerator(SquareMatrix q);

  /// Symmetric conservative generator: off-diagonals uniform in [0,1],
  /// symmetrized, diagonal set so every row sums to zero.
  static MarkovGenerator random_symmetric(Rng& rng, std::size_t n);

  std::size_t size() const { return q_.size(); }
  const SquareMatrix& matrix() const { return q_; }

 private:
  SquareMatrix q_;
};

/// e^(tQ) f, relative accuracy ~1e-14.
std::vector<double> markov_apply(const MarkovGenerator& q, double t, std::span<const double> f);

/// integral_0^alpha e^(tQ) f dt = alpha * phi1(alpha Q) f; alpha must be > 0.
std::vector<double> markov_integral(const MarkovGenerator& q, double alpha,
                                    std::span<const double> f);

}  // namespace maxlab
