#pragma once

#include <span>
#include <vector>

#include "maxlab/grid.hpp"

namespace maxlab {

/// Frequency-side mirror of a spatial grid: same dimension, box and node
/// count, carrying the same weighted measure.
class SpectralGrid : public WeightedGrid {
 public:
  using WeightedGrid::WeightedGrid;
  static SpectralGrid mirror(const WeightedGrid& g) {
    return SpectralGrid(g.root_system(), g.half_width(), g.points_per_axis());
  }
};

struct TransformResult {
  ComplexGridFunction values;
  bool decay_warning = false;  // input boundary mass above 1e-6 of its peak
};

struct TranslateResult {
  GridFunction values;
  double imag_residue = 0.0;  // largest |Im| dropped when realifying
  bool decay_warning = false;
};

/// Dense-quadrature Dunkl transform pair on mirrored grids:
///   forward: c sum_j E(-i xi, y_j) f_j w_j      inverse: c sum_k E(i x, xi_k) g_k w_k
/// with c fixed by the weighted Gaussian integral. Kernel matrices are built
/// once per axis (O(N^2) storage) and reused; translation acts through the
/// multiplier E(i x, .) on the frequency side.
class DunklTransformer {
 public:
  DunklTransformer(const WeightedGrid& grid, const SpectralGrid& sgrid);

  TransformResult forward(const GridFunction& f) const;
  TransformResult forward(const ComplexGridFunction& f) const;
  TransformResult inverse(const ComplexGridFunction& g) const;
  TranslateResult translate(std::span<const double> x, const GridFunction& f) const;

  /// E(i x, xi_k) over all spectral nodes.
  ComplexGridFunction point_multiplier(std::span<const double> x) const;

  double mehta() const { return mehta_; }
  const WeightedGrid& grid() const { return *grid_; }
  const SpectralGrid& spectral() const { return *sgrid_; }

 private:
  ComplexGridFunction contract(const ComplexGridFunction& in, bool conjugate) const;
  static bool poor_decay(const ComplexGridFunction& f, const WeightedGrid& g);

  const WeightedGrid* grid_;
  const SpectralGrid* sgrid_;
  double mehta_;
  // per axis: (N x N) forward kernel with the y-side axis weight folded in
  std::vector<std::vector<std::complex<double>>> fwd_axis_;
};

}  // namespace maxlab
