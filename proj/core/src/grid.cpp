#include "maxlab/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace maxlab {

FiniteMeasureSpace::FiniteMeasureSpace(std::vector<double> masses) : masses_(std::move(masses)) {
  if (masses_.empty()) throw std::invalid_argument("FiniteMeasureSpace: empty");
  for (double m : masses_) {
    if (!(m > 0.0) || !std::isfinite(m))
      throw std::invalid_argument("FiniteMeasureSpace: masses must be finite and > 0");
  }
}

FiniteMeasureSpace FiniteMeasureSpace::counting(std::size_t n) {
  return FiniteMeasureSpace(std::vector<double>(n, 1.0));
}

WeightedGrid::WeightedGrid(RootSystem rs, double half_width, int points_per_axis)
    : rs_(std::move(rs)), half_width_(half_width), points_(points_per_axis) {
  if (!(half_width > 0.0)) throw std::invalid_argument("WeightedGrid: half_width must be > 0");
  if (points_ < 2 || points_ % 2 != 0)
    throw std::invalid_argument("WeightedGrid: points_per_axis must be even and >= 2");
  const int d = rs_.dimension();
  if (d > 3) throw std::invalid_argument("WeightedGrid: dimension > 3 not supported");

  spacing_ = 2.0 * half_width_ / points_;
  axis_nodes_.resize(static_cast<std::size_t>(points_));
  for (int i = 0; i < points_; ++i)
    axis_nodes_[static_cast<std::size_t>(i)] = -half_width_ + (i + 0.5) * spacing_;

  // Exact cell masses integral_cell |y|^(2 kappa) dy (cells never straddle 0,
  // which is a cell edge for even N). Point sampling |x_j|^(2k) h overshoots
  // the heat-kernel mass above 1 near the hyperplane; the exact measure keeps
  // quadrature error attached to the smooth factor instead of the kink.
  axis_weights_.resize(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) {
    auto& wa = axis_weights_[static_cast<std::size_t>(a)];
    wa.resize(static_cast<std::size_t>(points_));
    const double kap = rs_.axis_kappa(a);
    const double e = 2.0 * kap + 1.0;
    const auto anti = [&](double y) {
      return std::copysign(std::pow(std::abs(y), e), y) / e;
    };
    for (int i = 0; i < points_; ++i) {
      const double x = axis_nodes_[static_cast<std::size_t>(i)];
      wa[static_cast<std::size_t>(i)] =
          kap == 0.0 ? spacing_ : anti(x + 0.5 * spacing_) - anti(x - 0.5 * spacing_);
    }
  }

  std::size_t total = 1;
  strides_.assign(static_cast<std::size_t>(d), 1);
  for (int a = d - 1; a >= 0; --a) {
    strides_[static_cast<std::size_t>(a)] = total;
    total *= static_cast<std::size_t>(points_);
  }
  weights_.resize(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    double w = 1.0;
    for (int a = 0; a < d; ++a) {
      const std::size_t i = (idx / strides_[static_cast<std::size_t>(a)]) %
                            static_cast<std::size_t>(points_);
      w *= axis_weights_[static_cast<std::size_t>(a)][i];
    }
    weights_[idx] = w;
  }
}

double WeightedGrid::node_coord(std::size_t idx, int axis) const {
  const std::size_t i =
      (idx / strides_[static_cast<std::size_t>(axis)]) % static_cast<std::size_t>(points_);
  return axis_nodes_[i];
}

std::vector<double> WeightedGrid::node(std::size_t idx) const {
  std::vector<double> x(static_cast<std::size_t>(dimension()));
  for (int a = 0; a < dimension(); ++a) x[static_cast<std::size_t>(a)] = node_coord(idx, a);
  return x;
}

std::span<const double> WeightedGrid::axis_weight(int axis) const {
  return axis_weights_[static_cast<std::size_t>(axis)];
}

double WeightedGrid::axis_mass(int axis, double a, double b) const {
  const double kap = rs_.axis_kappa(axis);
  if (kap == 0.0) return b - a;
  const double e = 2.0 * kap + 1.0;
  const auto anti = [&](double y) { return std::copysign(std::pow(std::abs(y), e), y) / e; };
  return anti(b) - anti(a);
}

WeightedGrid::AxisCellRule WeightedGrid::axis_cell_rule(int axis, int j) const {
  AxisCellRule rule;
  const double x = axis_nodes_[static_cast<std::size_t>(j)];
  const double kap = rs_.axis_kappa(axis);
  if (kap == 0.0) {
    rule.count = 1;
    rule.pts[0] = x;
    rule.mass[0] = axis_weights_[static_cast<std::size_t>(axis)][static_cast<std::size_t>(j)];
    return rule;
  }
  if (j == points_ / 2 - 1 || j == points_ / 2) {
    rule.count = 16;
    const double lo = x - 0.5 * spacing_;
    const double sub = spacing_ / rule.count;
    for (int s = 0; s < rule.count; ++s) {
      rule.pts[s] = lo + (s + 0.5) * sub;
      rule.mass[s] = axis_mass(axis, lo + s * sub, lo + (s + 1) * sub);
    }
    return rule;
  }
  static const double gl_x[4] = {-0.8611363115940526, -0.3399810435848563,
                                 0.3399810435848563, 0.8611363115940526};
  static const double gl_w[4] = {0.3478548451374538, 0.6521451548625461,
                                 0.6521451548625461, 0.3478548451374538};
  rule.count = 4;
  for (int s = 0; s < 4; ++s) {
    const double y = x + 0.5 * spacing_ * gl_x[s];
    rule.pts[s] = y;
    rule.mass[s] = 0.5 * spacing_ * gl_w[s] * std::pow(std::abs(y), 2.0 * kap);
  }
  return rule;
}

std::size_t WeightedGrid::flip_index(std::size_t idx, int axis) const {
  const std::size_t stride = strides_[static_cast<std::size_t>(axis)];
  const std::size_t n = static_cast<std::size_t>(points_);
  const std::size_t i = (idx / stride) % n;
  return idx + (n - 1 - 2 * i) * stride;
}

std::size_t WeightedGrid::flip_all(std::size_t idx) const {
  for (int a = 0; a < dimension(); ++a) idx = flip_index(idx, a);
  return idx;
}

double ball_measure(const WeightedGrid& grid, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("ball_measure: r must be > 0");
  if (r > grid.half_width())
    throw std::invalid_argument("ball_measure: r exceeds the domain half-width");
  const double r2 = r * r;
  double sum = 0.0;
  const auto w = grid.quad_weights();
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    double n2 = 0.0;
    for (int a = 0; a < grid.dimension(); ++a) {
      const double c = grid.node_coord(idx, a);
      n2 += c * c;
    }
    if (n2 <= r2) sum += w[idx];
  }
  return sum;
}

}  // namespace maxlab
