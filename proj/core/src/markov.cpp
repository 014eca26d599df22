#include "maxlab/markov.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace maxlab {

SquareMatrix SquareMatrix::identity(std::size_t n) {
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("SquareMatrix: size mismatch");
  SquareMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const double aik = (*this)(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n_; ++j) out(i, j) += aik * rhs(k, j);
    }
  return out;
}

std::vector<double> SquareMatrix::apply(std::span<const double> v) const {
  if (v.size() != n_) throw std::invalid_argument("SquareMatrix: vector size mismatch");
  std::vector<double> out(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

double SquareMatrix::norm_inf() const {
  double m = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n_; ++j) row += std::abs((*this)(i, j));
    m = std::max(m, row);
  }
  return m;
}

namespace {

// Taylor sums of e^A and phi1(A) for ||A|| <= 1/2, then doubled k times via
//   e^(2A) = (e^A)^2,   phi1(2A) = (I + e^A) phi1(A) / 2.
std::pair<SquareMatrix, SquareMatrix> exp_and_phi1(const SquareMatrix& a) {
  const std::size_t n = a.size();
  int squarings = 0;
  double norm = a.norm_inf();
  while (norm > 0.5) {
    norm *= 0.5;
    ++squarings;
  }
  const double scale = std::ldexp(1.0, -squarings);

  SquareMatrix as(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) as(i, j) = a(i, j) * scale;

  SquareMatrix e = SquareMatrix::identity(n);
  SquareMatrix phi = SquareMatrix::identity(n);
  SquareMatrix term = SquareMatrix::identity(n);
  double kfact = 1.0;
  for (int k = 1; k <= 30; ++k) {
    term = term * as;
    kfact *= k;
    double maxabs = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const double c = term(i, j) / kfact;
        e(i, j) += c;
        phi(i, j) += c / (k + 1);
        maxabs = std::max(maxabs, std::abs(c));
      }
    if (maxabs < 1e-18) break;
  }

  for (int s = 0; s < squarings; ++s) {
    SquareMatrix ipe = SquareMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) ipe(i, j) += e(i, j);
    phi = ipe * phi;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) phi(i, j) *= 0.5;
    e = e * e;
  }
  return {std::move(e), std::move(phi)};
}

}  // namespace

SquareMatrix matrix_exp(const SquareMatrix& a) { return exp_and_phi1(a).first; }
SquareMatrix matrix_phi1(const SquareMatrix& a) { return exp_and_phi1(a).second; }

MarkovGenerator::MarkovGenerator(SquareMatrix q) : q_(std::move(q)) {
  const std::size_t n = q_.size();
  if (n == 0) throw std::invalid_argument("MarkovGenerator: empty matrix");
  double scale = 1e-12 * std::max(1.0, q_.norm_inf());
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0, col = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(q_(i, j)))
        throw std::invalid_argument("MarkovGenerator: non-finite entry");
      if (i != j && q_(i, j) < 0.0)
        throw std::invalid_argument("MarkovGenerator: negative off-diagonal");
      row += q_(i, j);
      col += q_(j, i);
    }
    if (row > scale || col > scale)
      throw std::invalid_argument("MarkovGenerator: row/column sums must be <= 0");
  }
}

MarkovGenerator MarkovGenerator::random_symmetric(Rng& rng, std::size_t n) {
  SquareMatrix q(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double u = 0.5 * (rng.uniform() + rng.uniform());
      q(i, j) = u;
      q(j, i) = u;
    }
  for (std::size_t i = 0; i < n; ++i) {
    double offsum = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) offsum += q(i, j);
    q(i, i) = -offsum;
  }
  return MarkovGenerator(std::move(q));
}

std::vector<double> markov_apply(const MarkovGenerator& q, double t, std::span<const double> f) {
  if (!(t >= 0.0)) throw std::invalid_argument("markov_apply: t must be >= 0");
  for (double v : f)
    if (!std::isfinite(v)) throw std::invalid_argument("markov_apply: non-finite input");
  if (t == 0.0) return {f.begin(), f.end()};
  const std::size_t n = q.size();
  SquareMatrix tq(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) tq(i, j) = t * q.matrix()(i, j);
  return matrix_exp(tq).apply(f);
}

std::vector<double> markov_integral(const MarkovGenerator& q, double alpha,
                                    std::span<const double> f) {
  if (!(alpha > 0.0)) throw std::invalid_argument("markov_integral: alpha must be > 0");
  for (double v : f)
    if (!std::isfinite(v)) throw std::invalid_argument("markov_integral: non-finite input");
  const std::size_t n = q.size();
  SquareMatrix aq(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) aq(i, j) = alpha * q.matrix()(i, j);
  auto out = matrix_phi1(aq).apply(f);
  for (double& v : out) v *= alpha;
  return out;
}

}  // namespace maxlab
