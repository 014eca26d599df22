#pragma once

#include <memory>
#include <mutex>

#include "maxlab/semigroup.hpp"

namespace maxlab {

/// Base for heat-type semigroups whose kernel factorizes across axes:
/// Q(x, y, t) = prefactor(t) * prod_a K_a(x_a, y_a, t). apply contracts one
/// axis at a time against quadrature-weighted kernel tables.
///
/// Time handling: the geometric time_nodes drive integrate/averages
/// (trapezoid with the exact t = 0 endpoint) and get cached kernel tables.
/// For t below the grid resolution (sqrt(2t) under ~1.4 h) the discrete
/// kernel is a broken delta, so apply switches to the heat Taylor branch
/// f + t Lap f + t^2/2 Lap^2 f; both branches agree to ~1e-8 at the switch.
class SeparableKernelSemigroup : public ContractionSemigroup {
 public:
  SeparableKernelSemigroup(const WeightedGrid& grid, std::vector<double> time_nodes);

  std::size_t size() const override { return grid_->size(); }
  std::span<const double> masses() const override { return grid_->quad_weights(); }

  GridFunction apply(double t, const GridFunction& f) const override;
  GridFunction integrate(double alpha, const GridFunction& f) const override;
  std::vector<GridFunction> averages(std::span<const double> alphas,
                                     const GridFunction& f) const override;

  /// Build all cached kernel tables up front (call before parallel phases).
  void prepare() const;

  std::span<const double> time_nodes() const { return time_nodes_; }
  /// Box guard: sqrt(t) <= L/4.
  double max_time() const;
  const WeightedGrid& grid() const { return *grid_; }

  /// Raw kernel value Q(x_i, x_j, t), no quadrature weight.
  double kernel_value(std::size_t i, std::size_t j, double t) const;

 protected:
  virtual double axis_kernel(int axis, double x, double y, double t) const = 0;
  virtual double prefactor(double t) const = 0;
  virtual GridFunction laplacian(const GridFunction& f) const = 0;

 private:
  struct Tables {
    double pref = 1.0;
    std::vector<std::vector<double>> axis;  // per axis, N x N, y-weight folded in
  };

  Tables build_tables(double t) const;
  GridFunction apply_tables(const Tables& tb, const GridFunction& f) const;
  GridFunction apply_taylor(double t, const GridFunction& f) const;

  const WeightedGrid* grid_;
  std::vector<double> time_nodes_;
  double taylor_threshold_;
  mutable std::mutex cache_mutex_;
  mutable std::vector<std::unique_ptr<Tables>> cache_;
};

}  // namespace maxlab
