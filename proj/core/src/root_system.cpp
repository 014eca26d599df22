#include "maxlab/root_system.hpp"

#include <cmath>
#include <stdexcept>

namespace maxlab {

RootSystem::RootSystem(ReflectionFamily family, int dimension, std::vector<double> roots,
                       std::vector<double> multiplicity)
    : family_(family),
      dimension_(dimension),
      roots_(std::move(roots)),
      multiplicity_(std::move(multiplicity)) {
  validate();
}

RootSystem RootSystem::trivial(int dimension) {
  if (dimension < 1) throw std::invalid_argument("RootSystem: dimension must be positive");
  return RootSystem(ReflectionFamily::trivial, dimension, {}, {});
}

RootSystem RootSystem::rank1(double kappa) {
  return RootSystem(ReflectionFamily::rank1_z2, 1, {1.0, -1.0}, {kappa, kappa});
}

RootSystem RootSystem::product_z2(std::vector<double> kappa_per_axis) {
  const int d = static_cast<int>(kappa_per_axis.size());
  if (d < 1) throw std::invalid_argument("RootSystem: need at least one axis");
  std::vector<double> roots(static_cast<std::size_t>(2 * d) * d, 0.0);
  std::vector<double> mult(static_cast<std::size_t>(2 * d));
  for (int a = 0; a < d; ++a) {
    roots[static_cast<std::size_t>(2 * a) * d + a] = 1.0;
    roots[static_cast<std::size_t>(2 * a + 1) * d + a] = -1.0;
    mult[static_cast<std::size_t>(2 * a)] = kappa_per_axis[a];
    mult[static_cast<std::size_t>(2 * a + 1)] = kappa_per_axis[a];
  }
  return RootSystem(d == 1 ? ReflectionFamily::rank1_z2 : ReflectionFamily::product_z2d, d,
                    std::move(roots), std::move(mult));
}

void RootSystem::validate() const {
  for (double k : multiplicity_) {
    if (!(k >= 0.0) || !std::isfinite(k))
      throw std::invalid_argument("RootSystem: multiplicities must be finite and >= 0");
  }
  // R = -R with matching multiplicities: our factories emit +-pairs adjacently.
  const std::size_t d = static_cast<std::size_t>(dimension_);
  for (std::size_t k = 0; k + 1 < root_count(); k += 2) {
    for (std::size_t c = 0; c < d; ++c) {
      if (roots_[k * d + c] != -roots_[(k + 1) * d + c])
        throw std::invalid_argument("RootSystem: roots not closed under negation");
    }
    if (multiplicity_[k] != multiplicity_[k + 1])
      throw std::invalid_argument("RootSystem: multiplicity not reflection invariant");
  }
}

std::span<const double> RootSystem::root(std::size_t k) const {
  const std::size_t d = static_cast<std::size_t>(dimension_);
  return {roots_.data() + k * d, d};
}

double RootSystem::axis_kappa(int axis) const {
  if (family_ == ReflectionFamily::trivial) return 0.0;
  return multiplicity_[static_cast<std::size_t>(2 * axis)];
}

double RootSystem::gamma() const {
  double sum = 0.0;
  for (double k : multiplicity_) sum += k;
  return 0.5 * sum;
}

double RootSystem::weight_at(std::span<const double> x) const {
  double w = 1.0;
  const std::size_t d = static_cast<std::size_t>(dimension_);
  for (std::size_t k = 0; k < root_count(); ++k) {
    const double kap = multiplicity_[k];
    if (kap == 0.0) continue;  // |<x,a>|^0 = 1, including at the hyperplane
    double dot = 0.0;
    for (std::size_t c = 0; c < d; ++c) dot += x[c] * roots_[k * d + c];
    w *= std::pow(std::abs(dot), kap);
  }
  return w;
}

}  // namespace maxlab
