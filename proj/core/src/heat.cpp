#include "maxlab/heat.hpp"

#include <cmath>
#include <stdexcept>

#include "maxlab/dunkl_operator.hpp"

namespace maxlab {

HeatSemigroup::HeatSemigroup(const WeightedGrid& grid, std::vector<double> time_nodes)
    : SeparableKernelSemigroup(grid, std::move(time_nodes)) {
  for (int a = 0; a < grid.dimension(); ++a)
    if (grid.root_system().axis_kappa(a) != 0.0)
      throw std::invalid_argument("HeatSemigroup: requires a kappa = 0 grid");
}

double HeatSemigroup::axis_kernel(int, double x, double y, double t) const {
  const double d = x - y;
  return std::exp(-d * d / (4.0 * t)) / std::sqrt(4.0 * M_PI * t);
}

GridFunction HeatSemigroup::laplacian(const GridFunction& f) const {
  return dunkl_laplacian(grid(), f);  // kappa = 0: plain finite differences
}

GridFunction heat_apply(const WeightedGrid& grid, double t, const GridFunction& f) {
  if (!(t > 0.0)) throw std::invalid_argument("heat_apply: t must be > 0");
  return HeatSemigroup(grid).apply(t, f);
}

}  // namespace maxlab
