#pragma once

#include "maxlab/kernel_semigroup.hpp"

namespace maxlab {

/// Euclidean heat semigroup on an unweighted grid: convolution with
/// (4 pi t)^(-d/2) e^(-|x-y|^2 / 4t) under midpoint quadrature.
class HeatSemigroup final : public SeparableKernelSemigroup {
 public:
  explicit HeatSemigroup(const WeightedGrid& grid, std::vector<double> time_nodes = {});

 protected:
  double axis_kernel(int axis, double x, double y, double t) const override;
  double prefactor(double) const override { return 1.0; }
  GridFunction laplacian(const GridFunction& f) const override;
};

/// One-shot convolution with the Gaussian heat kernel; t must be positive
/// and satisfy the box guard sqrt(t) <= L/4.
GridFunction heat_apply(const WeightedGrid& grid, double t, const GridFunction& f);

}  // namespace maxlab
