#include "maxlab/dunkl_transform.hpp"

#include <cmath>
#include <stdexcept>

#include "maxlab/dunkl_heat.hpp"
#include "maxlab/dunkl_kernel.hpp"
#include "maxlab/parallel.hpp"

namespace maxlab {

DunklTransformer::DunklTransformer(const WeightedGrid& grid, const SpectralGrid& sgrid)
    : grid_(&grid), sgrid_(&sgrid), mehta_(mehta_constant(grid.root_system(), grid)) {
  if (grid.dimension() != sgrid.dimension() ||
      grid.points_per_axis() != sgrid.points_per_axis() ||
      grid.half_width() != sgrid.half_width())
    throw std::invalid_argument("DunklTransformer: spectral grid must mirror the spatial grid");

  const int d = grid.dimension();
  const std::size_t n = static_cast<std::size_t>(grid.points_per_axis());
  fwd_axis_.resize(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) {
    auto& m = fwd_axis_[static_cast<std::size_t>(a)];
    m.resize(n * n);
    const double kappa = grid.root_system().axis_kappa(a);
    std::vector<WeightedGrid::AxisCellRule> rules(n);
    for (std::size_t j = 0; j < n; ++j)
      rules[j] = grid.axis_cell_rule(a, static_cast<int>(j));
    parallel_for(n, [&](std::size_t k) {
      const double xi = sgrid_->axis_node(static_cast<int>(k));
      for (std::size_t j = 0; j < n; ++j) {
        // E(-i xi, y) = conj(E(i xi, y)) for real arguments
        const auto& rule = rules[j];
        std::complex<double> acc(0.0, 0.0);
        for (int s = 0; s < rule.count; ++s)
          acc += std::conj(dunkl_kernel_imag(kappa, xi * rule.pts[s])) * rule.mass[s];
        m[k * n + j] = acc;
      }
    });
  }
}

bool DunklTransformer::poor_decay(const ComplexGridFunction& f, const WeightedGrid& g) {
  double peak = 0.0;
  for (const auto& v : f) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return false;
  const std::size_t n = static_cast<std::size_t>(g.points_per_axis());
  double edge = 0.0;
  for (std::size_t idx = 0; idx < f.size(); ++idx) {
    bool boundary = false;
    for (int a = 0; a < g.dimension(); ++a) {
      std::size_t stride = 1;
      for (int b = g.dimension() - 1; b > a; --b) stride *= n;
      const std::size_t i = (idx / stride) % n;
      if (i == 0 || i + 1 == n) boundary = true;
    }
    if (boundary) edge = std::max(edge, std::abs(f[idx]));
  }
  return edge > 1e-6 * peak;
}

ComplexGridFunction DunklTransformer::contract(const ComplexGridFunction& in,
                                               bool conjugate) const {
  const int d = grid_->dimension();
  const std::size_t n = static_cast<std::size_t>(grid_->points_per_axis());
  ComplexGridFunction cur = in;
  ComplexGridFunction next(cur.size());
  std::size_t stride = 1;
  for (int a = d - 1; a >= 0; --a) {
    const auto& m = fwd_axis_[static_cast<std::size_t>(a)];
    const std::size_t outer = cur.size() / (n * stride);
    parallel_for(outer * n, [&](std::size_t ok) {
      const std::size_t o = ok / n;
      const std::size_t k = ok % n;
      const std::size_t base = o * n * stride;
      const std::complex<double>* row = m.data() + k * n;
      for (std::size_t s = 0; s < stride; ++s) {
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
          const std::complex<double> mk = conjugate ? std::conj(row[j]) : row[j];
          acc += mk * cur[base + j * stride + s];
        }
        next[base + k * stride + s] = acc;
      }
    });
    std::swap(cur, next);
    stride *= n;
  }
  for (auto& v : cur) v *= mehta_;
  return cur;
}

TransformResult DunklTransformer::forward(const ComplexGridFunction& f) const {
  if (f.size() != grid_->size()) throw std::invalid_argument("forward: size mismatch");
  TransformResult r;
  r.decay_warning = poor_decay(f, *grid_);
  r.values = contract(f, false);
  return r;
}

TransformResult DunklTransformer::forward(const GridFunction& f) const {
  ComplexGridFunction cf(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) cf[j] = f[j];
  return forward(cf);
}

TransformResult DunklTransformer::inverse(const ComplexGridFunction& g) const {
  if (g.size() != sgrid_->size()) throw std::invalid_argument("inverse: size mismatch");
  TransformResult r;
  r.decay_warning = poor_decay(g, *sgrid_);
  r.values = contract(g, true);
  return r;
}

ComplexGridFunction DunklTransformer::point_multiplier(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != grid_->dimension())
    throw std::invalid_argument("point_multiplier: dimension mismatch");
  const int d = grid_->dimension();
  const std::size_t n = static_cast<std::size_t>(grid_->points_per_axis());
  // per-axis vectors E(i x_a, xi)
  std::vector<ComplexGridFunction> per_axis(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) {
    auto& v = per_axis[static_cast<std::size_t>(a)];
    v.resize(n);
    const double kappa = grid_->root_system().axis_kappa(a);
    for (std::size_t k = 0; k < n; ++k)
      v[k] = dunkl_kernel_imag(kappa, x[static_cast<std::size_t>(a)] *
                                          sgrid_->axis_node(static_cast<int>(k)));
  }
  ComplexGridFunction out(sgrid_->size());
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    std::complex<double> prod(1.0, 0.0);
    std::size_t rest = idx;
    for (int a = 0; a < d; ++a) {
      std::size_t stride = 1;
      for (int b = d - 1; b > a; --b) stride *= n;
      prod *= per_axis[static_cast<std::size_t>(a)][(rest / stride) % n];
    }
    out[idx] = prod;
  }
  return out;
}

TranslateResult DunklTransformer::translate(std::span<const double> x,
                                            const GridFunction& f) const {
  TransformResult fhat = forward(f);
  const ComplexGridFunction mult = point_multiplier(x);
  for (std::size_t k = 0; k < fhat.values.size(); ++k) fhat.values[k] *= mult[k];
  TransformResult back = inverse(fhat.values);

  TranslateResult r;
  r.decay_warning = fhat.decay_warning || back.decay_warning;
  r.values.resize(back.values.size());
  for (std::size_t j = 0; j < back.values.size(); ++j) {
    r.values[j] = back.values[j].real();
    r.imag_residue = std::max(r.imag_residue, std::abs(back.values[j].imag()));
  }
  return r;
}

}  // namespace maxlab
