#include "maxlab/dunkl_heat.hpp"

#include <cmath>

#include "maxlab/dunkl_kernel.hpp"
#include "maxlab/dunkl_operator.hpp"

namespace maxlab {

double mehta_constant(const RootSystem& rs, const WeightedGrid& grid) {
  // The Gaussian integral factorizes per axis for the sign-flip groups, so
  // each 1-d factor gets a refined midpoint rule with exact cell masses on
  // the grid's own box. Normalization error ~1e-8, far below the mass
  // tolerance it feeds.
  (void)rs;
  const int fine = 16384;
  const double L = grid.half_width();
  const double h = 2.0 * L / fine;
  double inv = 1.0;
  for (int a = 0; a < grid.dimension(); ++a) {
    double acc = 0.0;
    for (int i = 0; i < fine; ++i) {
      const double x = -L + (i + 0.5) * h;
      acc += std::exp(-0.5 * x * x) * grid.axis_mass(a, x - 0.5 * h, x + 0.5 * h);
    }
    inv *= acc;
  }
  return 1.0 / inv;
}

DunklHeatSemigroup::DunklHeatSemigroup(const WeightedGrid& grid,
                                       std::vector<double> time_nodes)
    : SeparableKernelSemigroup(grid, std::move(time_nodes)),
      mehta_(mehta_constant(grid.root_system(), grid)),
      exponent_(0.5 * grid.dimension() + grid.gamma()) {}

double DunklHeatSemigroup::axis_kernel(int axis, double x, double y, double t) const {
  const double kappa = grid().root_system().axis_kappa(axis);
  const double gap = std::abs(x) - std::abs(y);
  return std::exp(-gap * gap / (4.0 * t)) * dunkl_kernel_scaled(kappa, x * y / (2.0 * t));
}

double DunklHeatSemigroup::prefactor(double t) const {
  return mehta_ * std::pow(2.0 * t, -exponent_);
}

GridFunction DunklHeatSemigroup::laplacian(const GridFunction& f) const {
  return dunkl_laplacian(grid(), f);
}

}  // namespace maxlab
