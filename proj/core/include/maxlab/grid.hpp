#pragma once

#include <complex>
#include <span>
#include <vector>

#include "maxlab/root_system.hpp"

namespace maxlab {

using GridFunction = std::vector<double>;
using ComplexGridFunction = std::vector<std::complex<double>>;
using VectorField = std::vector<GridFunction>;

/// n-point measure space with strictly positive masses.
class FiniteMeasureSpace {
 public:
  explicit FiniteMeasureSpace(std::vector<double> masses);
  static FiniteMeasureSpace counting(std::size_t n);

  std::size_t size() const { return masses_.size(); }
  std::span<const double> masses() const { return masses_; }

 private:
  std::vector<double> masses_;
};

/// Midpoint lattice on [-L, L]^d carrying the weighted measure
/// w_j = weight(x_j) * h^d. Nodes sit at x = -L + (j + 1/2) h, so no
/// coordinate is ever exactly 0 and sign-flips map nodes to nodes.
class WeightedGrid {
 public:
  WeightedGrid(RootSystem rs, double half_width, int points_per_axis);

  int dimension() const { return rs_.dimension(); }
  double half_width() const { return half_width_; }
  int points_per_axis() const { return points_; }
  double spacing() const { return spacing_; }
  std::size_t size() const { return weights_.size(); }

  double axis_node(int i) const { return axis_nodes_[static_cast<std::size_t>(i)]; }
  std::span<const double> axis_nodes() const { return axis_nodes_; }
  double node_coord(std::size_t idx, int axis) const;
  std::vector<double> node(std::size_t idx) const;

  std::span<const double> quad_weights() const { return weights_; }
  // per-axis cell mass (exact integral of |y|^(2 kappa_axis) over the cell);
  // the full weight is their product
  std::span<const double> axis_weight(int axis) const;

  // exact measure of [a, b] on one axis under |y|^(2 kappa_axis) dy
  double axis_mass(int axis, double a, double b) const;

  /// Sub-quadrature for one axis cell, for integrands smooth off the
  /// hyperplane. Unweighted axes keep the plain (node, mass) midpoint; on
  /// weighted axes the measure breaks the midpoint rule's telescoping, so
  /// cells carry a 4-point Gauss rule against |y|^(2k) dy, and the two cells
  /// straddling y = 0 (where the weight kinks) get exact-mass sub-cells.
  struct AxisCellRule {
    int count = 1;
    double pts[16];
    double mass[16];
  };
  AxisCellRule axis_cell_rule(int axis, int j) const;

  std::size_t flip_index(std::size_t idx, int axis) const;
  std::size_t flip_all(std::size_t idx) const;

  const RootSystem& root_system() const { return rs_; }
  double gamma() const { return rs_.gamma(); }

 private:
  RootSystem rs_;
  double half_width_;
  int points_;
  double spacing_;
  std::vector<double> axis_nodes_;
  std::vector<std::vector<double>> axis_weights_;
  std::vector<double> weights_;
  std::vector<std::size_t> strides_;
};

/// Weighted measure of the centered ball of radius r (quadrature over
/// ||x|| <= r). Throws if r exceeds the box half-width.
double ball_measure(const WeightedGrid& grid, double r);

}  // namespace maxlab
