#pragma once

#include "maxlab/kernel_semigroup.hpp"

namespace maxlab {

/// Mehta-type normalization: (integral of e^(-|u|^2/2) d mu_kappa)^(-1) by
/// quadrature on the given grid. Makes the transform unitary-compatible and
/// the heat kernel mass-1 (both checked elsewhere, not assumed).
double mehta_constant(const RootSystem& rs, const WeightedGrid& grid);

/// Heat semigroup of the Dunkl Laplacian with its explicit kernel
///   Q(x, y, t) = c_kappa (2t)^(-d/2-gamma) e^(-(|x|^2+|y|^2)/4t)
///                E_kappa(x/sqrt(2t), y/sqrt(2t))  > 0.
/// The kernel factorizes per axis for the sign-flip groups; each factor is
/// evaluated through the exponentially scaled kernel, so small t stays
/// finite: e^(-(|x|-|y|)^2/4t) * scaledE(x y / 2t).
class DunklHeatSemigroup final : public SeparableKernelSemigroup {
 public:
  DunklHeatSemigroup(const WeightedGrid& grid, std::vector<double> time_nodes = {});

  double mehta() const { return mehta_; }

 protected:
  double axis_kernel(int axis, double x, double y, double t) const override;
  double prefactor(double t) const override;
  GridFunction laplacian(const GridFunction& f) const override;

 private:
  double mehta_;
  double exponent_;  // d/2 + gamma
};

}  // namespace maxlab
