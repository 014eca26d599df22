#include "maxlab/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "maxlab/norms.hpp"

namespace maxlab {

GridFunction semigroup_average(const ContractionSemigroup& s, double alpha,
                               const GridFunction& f) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("semigroup_average: alpha must be >= 0");
  if (alpha == 0.0) return f;
  GridFunction avg = s.integrate(alpha, f);
  for (double& v : avg) v /= alpha;
  return avg;
}

GridFunction semigroup_maximal(const ContractionSemigroup& s, const GridFunction& f,
                               const SupGrid& sup) {
  const std::vector<double> alphas = sup.nodes();
  const std::vector<GridFunction> avgs = s.averages(alphas, f);
  GridFunction out(f.size(), 0.0);
  if (sup.include_zero_limit)
    for (std::size_t j = 0; j < f.size(); ++j) out[j] = std::abs(f[j]);
  for (const auto& avg : avgs)
    for (std::size_t j = 0; j < f.size(); ++j) out[j] = std::max(out[j], std::abs(avg[j]));
  return out;
}

VectorMaximal vector_semigroup_maximal(const ContractionSemigroup& s, const VectorField& f,
                                       const SupGrid& sup, double q) {
  if (f.empty()) throw std::invalid_argument("vector_semigroup_maximal: empty field");
  VectorMaximal out;
  out.components.reserve(f.size());
  for (const auto& fn : f) out.components.push_back(semigroup_maximal(s, fn, sup));
  out.lq = lq_field(out.components, q);
  return out;
}

GridFunction banach_maximal(const ContractionSemigroup& s, const VectorField& f,
                            const SupGrid& sup, double q) {
  if (f.empty()) throw std::invalid_argument("banach_maximal: empty field");
  const std::size_t n = f.front().size();
  const std::vector<double> alphas = sup.nodes();

  // averages per component, then the l^q norm inside the sup over alpha
  std::vector<std::vector<GridFunction>> avgs;
  avgs.reserve(f.size());
  for (const auto& fn : f) avgs.push_back(s.averages(alphas, fn));

  GridFunction out(n, 0.0);
  if (sup.include_zero_limit) out = lq_field(f, q);
  VectorField slice(f.size());
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    for (std::size_t c = 0; c < f.size(); ++c) slice[c] = avgs[c][a];
    const GridFunction norms = lq_field(slice, q);
    for (std::size_t j = 0; j < n; ++j) out[j] = std::max(out[j], norms[j]);
  }
  return out;
}

namespace {

void require_unweighted(const WeightedGrid& grid, const char* who) {
  for (int a = 0; a < grid.dimension(); ++a)
    if (grid.root_system().axis_kappa(a) != 0.0)
      throw std::invalid_argument(std::string(who) + ": requires a kappa = 0 grid");
}

// Prefix-sum ball averages; rows along the last axis.
class BallAverager {
 public:
  BallAverager(const WeightedGrid& grid, const GridFunction& absf) : grid_(&grid) {
    const std::size_t n = static_cast<std::size_t>(grid.points_per_axis());
    const std::size_t rows = grid.size() / n;
    pf_.assign(rows * (n + 1), 0.0);
    pw_.assign(rows * (n + 1), 0.0);
    const auto w = grid.quad_weights();
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t idx = r * n + j;
        pf_[r * (n + 1) + j + 1] = pf_[r * (n + 1) + j] + w[idx] * absf[idx];
        pw_[r * (n + 1) + j + 1] = pw_[r * (n + 1) + j] + w[idx];
      }
  }

  // average of |f| over the discrete ball {||y - x_center|| <= r}
  double average(std::size_t center, double radius) const {
    const auto& g = *grid_;
    const std::size_t n = static_cast<std::size_t>(g.points_per_axis());
    double num = 0.0, den = 0.0;
    if (g.dimension() == 1) {
      segment(0, g.node_coord(center, 0), radius, num, den);
    } else {
      const double cx = g.node_coord(center, 0);
      const double cy = g.node_coord(center, 1);
      for (std::size_t i0 = 0; i0 < n; ++i0) {
        const double dx = g.axis_node(static_cast<int>(i0)) - cx;
        if (std::abs(dx) > radius) continue;
        const double half = std::sqrt(std::max(0.0, radius * radius - dx * dx));
        segment(i0, cy, half, num, den);
      }
    }
    return den > 0.0 ? num / den : 0.0;
  }

 private:
  // add the row segment |y - c| <= half of row `row` into num/den
  void segment(std::size_t row, double c, double half, double& num, double& den) const {
    const auto& g = *grid_;
    const std::size_t n = static_cast<std::size_t>(g.points_per_axis());
    const double L = g.half_width();
    const double h = g.spacing();
    // node i sits at -L + (i + 1/2) h
    long lo = static_cast<long>(std::ceil((c - half + L) / h - 0.5 - 1e-9));
    long hi = static_cast<long>(std::floor((c + half + L) / h - 0.5 + 1e-9));
    lo = std::max<long>(lo, 0);
    hi = std::min<long>(hi, static_cast<long>(n) - 1);
    if (lo > hi) return;
    const std::size_t base = row * (n + 1);
    num += pf_[base + static_cast<std::size_t>(hi) + 1] - pf_[base + static_cast<std::size_t>(lo)];
    den += pw_[base + static_cast<std::size_t>(hi) + 1] - pw_[base + static_cast<std::size_t>(lo)];
  }

  const WeightedGrid* grid_;
  std::vector<double> pf_, pw_;
};

}  // namespace

GridFunction hardy_littlewood(const WeightedGrid& grid, const GridFunction& f,
                              const SupGrid& rsup) {
  require_unweighted(grid, "hardy_littlewood");
  if (grid.dimension() > 2)
    throw std::invalid_argument("hardy_littlewood: d <= 2 only");
  if (f.size() != grid.size()) throw std::invalid_argument("hardy_littlewood: size mismatch");

  GridFunction absf(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) absf[j] = std::abs(f[j]);
  const BallAverager balls(grid, absf);

  GridFunction out(f.size(), 0.0);
  if (rsup.include_zero_limit) out = absf;
  for (double r : rsup.nodes()) {
    const double rc = std::min(r, grid.half_width() / 2.0);  // radius cap
    for (std::size_t j = 0; j < f.size(); ++j)
      out[j] = std::max(out[j], balls.average(j, rc));
  }
  return out;
}

VectorMaximal fefferman_stein(const WeightedGrid& grid, const VectorField& f,
                              const SupGrid& rsup, double q) {
  if (f.empty()) throw std::invalid_argument("fefferman_stein: empty field");
  VectorMaximal out;
  out.components.reserve(f.size());
  for (const auto& fn : f) out.components.push_back(hardy_littlewood(grid, fn, rsup));
  out.lq = lq_field(out.components, q);
  return out;
}

namespace {

GridFunction ball_indicator(const WeightedGrid& grid, double r) {
  GridFunction chi(grid.size(), 0.0);
  const double r2 = r * r;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    double n2 = 0.0;
    for (int a = 0; a < grid.dimension(); ++a) {
      const double c = grid.node_coord(j, a);
      n2 += c * c;
    }
    if (n2 <= r2) chi[j] = 1.0;
  }
  return chi;
}

}  // namespace

GridFunction dunkl_maximal_direct(const DunklTransformer& transformer, const GridFunction& f,
                                  const SupGrid& rsup, bool* decay_warning) {
  const WeightedGrid& grid = transformer.grid();
  if (f.size() != grid.size()) throw std::invalid_argument("dunkl_maximal_direct: size mismatch");

  const TransformResult fhat = transformer.forward(f);
  if (decay_warning) *decay_warning = fhat.decay_warning;
  GridFunction out(f.size(), 0.0);
  if (rsup.include_zero_limit)
    for (std::size_t j = 0; j < f.size(); ++j) out[j] = std::abs(f[j]);

  for (double r : rsup.nodes()) {
    const double rc = std::min(r, grid.half_width() / 2.0);
    const double measure = ball_measure(grid, rc);
    if (measure <= 0.0) continue;
    const GridFunction chi = ball_indicator(grid, rc);
    const TransformResult chihat = transformer.forward(chi);
    ComplexGridFunction prod(fhat.values.size());
    for (std::size_t k = 0; k < prod.size(); ++k)
      prod[k] = fhat.values[k] * chihat.values[k];
    const TransformResult conv = transformer.inverse(prod);
    const double inv_cm = 1.0 / (transformer.mehta() * measure);
    for (std::size_t j = 0; j < f.size(); ++j)
      out[j] = std::max(out[j], std::abs(conv.values[j]) * inv_cm);
  }
  return out;
}

double dunkl_ball_average_literal(const DunklTransformer& transformer, std::size_t node,
                                  double r, const GridFunction& f) {
  const WeightedGrid& grid = transformer.grid();
  const GridFunction chi = ball_indicator(grid, r);
  const std::vector<double> x = grid.node(node);
  const TranslateResult tchi = transformer.translate(x, chi);
  const auto w = grid.quad_weights();
  double acc = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j)
    acc += f[j] * tchi.values[grid.flip_all(j)] * w[j];
  return std::abs(acc) / ball_measure(grid, r);
}

GridFunction dunkl_heat_maximal(const ContractionSemigroup& heat, const GridFunction& f,
                                const SupGrid& sup) {
  GridFunction absf(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) absf[j] = std::abs(f[j]);
  return semigroup_maximal(heat, absf, sup);
}

}  // namespace maxlab
