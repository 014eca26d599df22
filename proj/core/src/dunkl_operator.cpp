#include "maxlab/dunkl_operator.hpp"

#include <stdexcept>

namespace maxlab {

namespace {

// 4th-order derivative along one line of the grid; values gathered via
// index arithmetic so the same code serves every axis.
void derivative_line(const double* f, double* out, std::size_t n, std::size_t stride,
                     double h) {
  const double inv12h = 1.0 / (12.0 * h);
  auto at = [&](std::size_t i) { return f[i * stride]; };
  out[0] = (-25.0 * at(0) + 48.0 * at(1) - 36.0 * at(2) + 16.0 * at(3) - 3.0 * at(4)) * inv12h;
  out[1 * stride] =
      (-3.0 * at(0) - 10.0 * at(1) + 18.0 * at(2) - 6.0 * at(3) + at(4)) * inv12h;
  for (std::size_t i = 2; i + 2 < n; ++i)
    out[i * stride] = (at(i - 2) - 8.0 * at(i - 1) + 8.0 * at(i + 1) - at(i + 2)) * inv12h;
  out[(n - 2) * stride] =
      (3.0 * at(n - 1) + 10.0 * at(n - 2) - 18.0 * at(n - 3) + 6.0 * at(n - 4) - at(n - 5)) *
      inv12h;
  out[(n - 1) * stride] = (25.0 * at(n - 1) - 48.0 * at(n - 2) + 36.0 * at(n - 3) -
                           16.0 * at(n - 4) + 3.0 * at(n - 5)) *
                          inv12h;
}

}  // namespace

GridFunction dunkl_operator_axis(const WeightedGrid& grid, int axis, const GridFunction& f) {
  if (f.size() != grid.size()) throw std::invalid_argument("dunkl_operator: size mismatch");
  const std::size_t n = static_cast<std::size_t>(grid.points_per_axis());
  if (n < 5) throw std::invalid_argument("dunkl_operator: need at least 5 points per axis");
  const int d = grid.dimension();

  std::size_t stride = 1;
  for (int a = d - 1; a > axis; --a) stride *= n;

  GridFunction out(f.size());
  const std::size_t lines = f.size() / n;
  for (std::size_t l = 0; l < lines; ++l) {
    // decompose line index into (outer, inner) around the axis
    const std::size_t inner = l % stride;
    const std::size_t outer = l / stride;
    const std::size_t base = outer * n * stride + inner;
    derivative_line(f.data() + base, out.data() + base, n, stride, grid.spacing());
  }

  const double kappa = grid.root_system().axis_kappa(axis);
  if (kappa != 0.0) {
    for (std::size_t idx = 0; idx < f.size(); ++idx) {
      const std::size_t flipped = grid.flip_index(idx, axis);
      out[idx] += kappa * (f[idx] - f[flipped]) / grid.node_coord(idx, axis);
    }
  }
  return out;
}

GridFunction dunkl_operator_apply(const WeightedGrid& grid, std::span<const double> xi,
                                  const GridFunction& f) {
  if (static_cast<int>(xi.size()) != grid.dimension())
    throw std::invalid_argument("dunkl_operator: direction dimension mismatch");
  GridFunction out(f.size(), 0.0);
  for (int a = 0; a < grid.dimension(); ++a) {
    if (xi[static_cast<std::size_t>(a)] == 0.0) continue;
    const GridFunction ta = dunkl_operator_axis(grid, a, f);
    for (std::size_t j = 0; j < f.size(); ++j) out[j] += xi[static_cast<std::size_t>(a)] * ta[j];
  }
  return out;
}

GridFunction dunkl_laplacian(const WeightedGrid& grid, const GridFunction& f) {
  GridFunction out(f.size(), 0.0);
  for (int a = 0; a < grid.dimension(); ++a) {
    const GridFunction ta = dunkl_operator_axis(grid, a, f);
    const GridFunction taa = dunkl_operator_axis(grid, a, ta);
    for (std::size_t j = 0; j < f.size(); ++j) out[j] += taa[j];
  }
  return out;
}

}  // namespace maxlab
