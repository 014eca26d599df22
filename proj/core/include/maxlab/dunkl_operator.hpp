#pragma once

#include <span>

#include "maxlab/grid.hpp"

namespace maxlab {

/// T_(e_axis) f = d_axis f + kappa_axis (f(x) - f(sigma_axis x)) / x_axis.
/// Derivative by 4th-order centered differences (one-sided at the box edge);
/// the reflection difference is exact since sign-flips map nodes to nodes and
/// the midpoint offset keeps x_axis != 0.
GridFunction dunkl_operator_axis(const WeightedGrid& grid, int axis, const GridFunction& f);

/// Dunkl operator in the direction xi (for Z2^d this is the xi-weighted sum
/// of the axis operators).
GridFunction dunkl_operator_apply(const WeightedGrid& grid, std::span<const double> xi,
                                  const GridFunction& f);

/// Dunkl Laplacian: sum over axes of the axis operator applied twice.
GridFunction dunkl_laplacian(const WeightedGrid& grid, const GridFunction& f);

}  // namespace maxlab
