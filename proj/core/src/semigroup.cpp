#include "maxlab/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "maxlab/norms.hpp"

namespace maxlab {

std::vector<GridFunction> ContractionSemigroup::averages(std::span<const double> alphas,
                                                         const GridFunction& f) const {
  std::vector<GridFunction> out;
  out.reserve(alphas.size());
  for (double alpha : alphas) {
    if (alpha == 0.0) {
      out.push_back(f);
      continue;
    }
    GridFunction avg = integrate(alpha, f);
    for (double& v : avg) v /= alpha;
    out.push_back(std::move(avg));
  }
  return out;
}

GridFunction IdentitySemigroup::integrate(double alpha, const GridFunction& f) const {
  if (!(alpha > 0.0)) throw std::invalid_argument("integrate: alpha must be > 0");
  GridFunction out = f;
  for (double& v : out) v *= alpha;
  return out;
}

MarkovSemigroup::MarkovSemigroup(MarkovGenerator generator, FiniteMeasureSpace space)
    : generator_(std::move(generator)), space_(std::move(space)) {
  if (generator_.size() != space_.size())
    throw std::invalid_argument("MarkovSemigroup: generator/space size mismatch");
}

MarkovSemigroup::MarkovSemigroup(MarkovGenerator generator)
    : MarkovSemigroup(std::move(generator),
                      FiniteMeasureSpace::counting(generator.size())) {}

GridFunction MarkovSemigroup::apply(double t, const GridFunction& f) const {
  return markov_apply(generator_, t, f);
}

GridFunction MarkovSemigroup::integrate(double alpha, const GridFunction& f) const {
  return markov_integral(generator_, alpha, f);
}

ContractionCheck check_contraction(const ContractionSemigroup& s, std::span<const double> ts,
                                   const std::vector<GridFunction>& fs, double tol) {
  if (ts.empty() || fs.empty())
    throw std::invalid_argument("check_contraction: need nonempty samples");
  ContractionCheck r;
  r.tol = tol;
  for (const auto& f : fs) {
    const double n1 = lp_norm(s.masses(), std::span<const double>(f), 1.0);
    const double ninf = lp_norm(s.masses(), std::span<const double>(f),
                                std::numeric_limits<double>::infinity());
    if (n1 == 0.0) continue;
    for (double t : ts) {
      const GridFunction tf = s.apply(t, f);
      r.worst_l1_ratio = std::max(
          r.worst_l1_ratio, lp_norm(s.masses(), std::span<const double>(tf), 1.0) / n1);
      r.worst_linf_ratio =
          std::max(r.worst_linf_ratio,
                   lp_norm(s.masses(), std::span<const double>(tf),
                           std::numeric_limits<double>::infinity()) /
                       ninf);
    }
  }
  r.pass = r.worst_l1_ratio <= 1.0 + tol && r.worst_linf_ratio <= 1.0 + tol;
  return r;
}

PositivityCheck check_positivity(const ContractionSemigroup& s, std::span<const double> ts,
                                 const std::vector<GridFunction>& fs, double tol) {
  if (ts.empty() || fs.empty())
    throw std::invalid_argument("check_positivity: need nonempty samples");
  PositivityCheck r;
  r.tol = tol;
  r.min_value = std::numeric_limits<double>::infinity();
  for (const auto& f : fs) {
    for (double v : f)
      if (v < 0.0) throw std::invalid_argument("check_positivity: samples must be nonnegative");
    for (double t : ts) {
      const GridFunction tf = s.apply(t, f);
      for (double v : tf) r.min_value = std::min(r.min_value, v);
    }
  }
  r.pass = r.min_value >= -tol;
  return r;
}

}  // namespace maxlab
