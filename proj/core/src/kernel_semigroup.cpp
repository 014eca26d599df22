#include "maxlab/kernel_semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "maxlab/parallel.hpp"

namespace maxlab {

SeparableKernelSemigroup::SeparableKernelSemigroup(const WeightedGrid& grid,
                                                   std::vector<double> time_nodes)
    : grid_(&grid), time_nodes_(std::move(time_nodes)) {
  for (std::size_t k = 0; k < time_nodes_.size(); ++k) {
    if (!(time_nodes_[k] > 0.0))
      throw std::invalid_argument("kernel semigroup: time nodes must be > 0");
    if (k > 0 && time_nodes_[k] <= time_nodes_[k - 1])
      throw std::invalid_argument("kernel semigroup: time nodes must increase");
  }
  const double h = grid.spacing();
  taylor_threshold_ = h * h;
  cache_.resize(time_nodes_.size());
}

double SeparableKernelSemigroup::max_time() const {
  const double s = grid_->half_width() / 4.0;
  return s * s;
}

SeparableKernelSemigroup::Tables SeparableKernelSemigroup::build_tables(double t) const {
  Tables tb;
  tb.pref = prefactor(t);
  const int d = grid_->dimension();
  const std::size_t n = static_cast<std::size_t>(grid_->points_per_axis());
  tb.axis.resize(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) {
    auto& m = tb.axis[static_cast<std::size_t>(a)];
    m.resize(n * n);
    std::vector<WeightedGrid::AxisCellRule> rules(n);
    for (std::size_t j = 0; j < n; ++j)
      rules[j] = grid_->axis_cell_rule(a, static_cast<int>(j));
    parallel_for(n, [&](std::size_t i) {
      const double x = grid_->axis_node(static_cast<int>(i));
      for (std::size_t j = 0; j < n; ++j) {
        const auto& rule = rules[j];
        double acc = 0.0;
        for (int s = 0; s < rule.count; ++s)
          acc += axis_kernel(a, x, rule.pts[s], t) * rule.mass[s];
        m[i * n + j] = acc;
      }
    });
  }
  return tb;
}

void SeparableKernelSemigroup::prepare() const {
  for (std::size_t k = 0; k < time_nodes_.size(); ++k) {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (!cache_[k]) cache_[k] = std::make_unique<Tables>(build_tables(time_nodes_[k]));
  }
}

GridFunction SeparableKernelSemigroup::apply_tables(const Tables& tb,
                                                    const GridFunction& f) const {
  const int d = grid_->dimension();
  const std::size_t n = static_cast<std::size_t>(grid_->points_per_axis());
  GridFunction cur = f;
  GridFunction next(cur.size());
  // contract axes from the fastest stride up; strides are n^(d-1-a)
  std::size_t stride = 1;
  for (int a = d - 1; a >= 0; --a) {
    const auto& m = tb.axis[static_cast<std::size_t>(a)];
    const std::size_t outer = cur.size() / (n * stride);
    for (std::size_t o = 0; o < outer; ++o) {
      const std::size_t base = o * n * stride;
      for (std::size_t s = 0; s < stride; ++s) {
        for (std::size_t i = 0; i < n; ++i) {
          double acc = 0.0;
          const double* row = m.data() + i * n;
          for (std::size_t j = 0; j < n; ++j) acc += row[j] * cur[base + j * stride + s];
          next[base + i * stride + s] = acc;
        }
      }
    }
    std::swap(cur, next);
    stride *= n;
  }
  for (double& v : cur) v *= tb.pref;
  return cur;
}

GridFunction SeparableKernelSemigroup::apply_taylor(double t, const GridFunction& f) const {
  const GridFunction lf = laplacian(f);
  const GridFunction llf = laplacian(lf);
  GridFunction out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j)
    out[j] = f[j] + t * lf[j] + 0.5 * t * t * llf[j];
  return out;
}

GridFunction SeparableKernelSemigroup::apply(double t, const GridFunction& f) const {
  if (f.size() != grid_->size()) throw std::invalid_argument("apply: size mismatch");
  if (!(t >= 0.0)) throw std::invalid_argument("apply: t must be >= 0");
  if (t == 0.0) return f;
  if (t > max_time())
    throw std::domain_error("apply: kernel support exceeds the box (need sqrt(t) <= L/4)");
  if (t < taylor_threshold_) return apply_taylor(t, f);

  for (std::size_t k = 0; k < time_nodes_.size(); ++k) {
    if (std::abs(time_nodes_[k] - t) <= 1e-12 * time_nodes_[k]) {
      {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        if (!cache_[k]) cache_[k] = std::make_unique<Tables>(build_tables(time_nodes_[k]));
      }
      return apply_tables(*cache_[k], f);
    }
  }
  return apply_tables(build_tables(t), f);
}

GridFunction SeparableKernelSemigroup::integrate(double alpha, const GridFunction& f) const {
  if (!(alpha > 0.0)) throw std::invalid_argument("integrate: alpha must be > 0");
  // trapezoid over {0} u {time nodes <= alpha} u {alpha}
  GridFunction acc(f.size(), 0.0);
  double t_prev = 0.0;
  GridFunction f_prev = f;  // exact t = 0 endpoint
  for (double tk : time_nodes_) {
    if (tk > alpha) break;
    GridFunction f_k = apply(tk, f);
    const double w = 0.5 * (tk - t_prev);
    for (std::size_t j = 0; j < f.size(); ++j) acc[j] += w * (f_prev[j] + f_k[j]);
    t_prev = tk;
    f_prev = std::move(f_k);
  }
  if (alpha > t_prev + 1e-12 * alpha) {
    GridFunction f_a = apply(alpha, f);
    const double w = 0.5 * (alpha - t_prev);
    for (std::size_t j = 0; j < f.size(); ++j) acc[j] += w * (f_prev[j] + f_a[j]);
  }
  return acc;
}

std::vector<GridFunction> SeparableKernelSemigroup::averages(std::span<const double> alphas,
                                                             const GridFunction& f) const {
  // one sweep over the time nodes, cumulative trapezoid reused for every alpha
  double alpha_max = 0.0;
  for (double a : alphas) alpha_max = std::max(alpha_max, a);

  std::vector<GridFunction> cums;  // cumulative integral at each node
  std::vector<double> ts;
  cums.reserve(time_nodes_.size());
  {
    GridFunction acc(f.size(), 0.0);
    double t_prev = 0.0;
    GridFunction f_prev = f;
    for (double tk : time_nodes_) {
      if (tk > alpha_max) break;
      GridFunction f_k = apply(tk, f);
      const double w = 0.5 * (tk - t_prev);
      for (std::size_t j = 0; j < f.size(); ++j) acc[j] += w * (f_prev[j] + f_k[j]);
      cums.push_back(acc);
      ts.push_back(tk);
      t_prev = tk;
      f_prev = std::move(f_k);
    }
  }

  std::vector<GridFunction> out;
  out.reserve(alphas.size());
  for (double alpha : alphas) {
    if (alpha == 0.0) {
      out.push_back(f);
      continue;
    }
    // last cached node <= alpha
    std::size_t k = 0;
    bool have = false;
    for (std::size_t i = 0; i < ts.size(); ++i)
      if (ts[i] <= alpha * (1.0 + 1e-12)) {
        k = i;
        have = true;
      }
    if (have && std::abs(ts[k] - alpha) <= 1e-12 * alpha) {
      GridFunction avg = cums[k];
      for (double& v : avg) v /= alpha;
      out.push_back(std::move(avg));
    } else {
      GridFunction avg = integrate(alpha, f);
      for (double& v : avg) v /= alpha;
      out.push_back(std::move(avg));
    }
  }
  return out;
}

double SeparableKernelSemigroup::kernel_value(std::size_t i, std::size_t j, double t) const {
  double v = prefactor(t);
  for (int a = 0; a < grid_->dimension(); ++a)
    v *= axis_kernel(a, grid_->node_coord(i, a), grid_->node_coord(j, a), t);
  return v;
}

}  // namespace maxlab
