#include "maxlab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace maxlab {

namespace {

void check_exponent(double p, const char* who) {
  if (!(p >= 1.0)) throw std::invalid_argument(std::string(who) + ": exponent must be >= 1");
}

template <typename AbsFn>
double lp_norm_impl(std::span<const double> masses, std::size_t n, double p, AbsFn absval) {
  if (n != masses.size()) throw std::invalid_argument("lp_norm: size mismatch");
  if (std::isinf(p)) {
    double m = 0.0;
    for (std::size_t j = 0; j < n; ++j) m = std::max(m, absval(j));
    return m;
  }
  double acc = 0.0;
  if (p == 1.0) {
    for (std::size_t j = 0; j < n; ++j) acc += masses[j] * absval(j);
    return acc;
  }
  if (p == 2.0) {
    for (std::size_t j = 0; j < n; ++j) {
      const double a = absval(j);
      acc += masses[j] * a * a;
    }
    return std::sqrt(acc);
  }
  for (std::size_t j = 0; j < n; ++j) acc += masses[j] * std::pow(absval(j), p);
  return std::pow(acc, 1.0 / p);
}

}  // namespace

double lp_norm(std::span<const double> masses, std::span<const double> f, double p) {
  check_exponent(p, "lp_norm");
  return lp_norm_impl(masses, f.size(), p, [&](std::size_t j) { return std::abs(f[j]); });
}

double lp_norm(std::span<const double> masses, const ComplexGridFunction& f, double p) {
  check_exponent(p, "lp_norm");
  return lp_norm_impl(masses, f.size(), p, [&](std::size_t j) { return std::abs(f[j]); });
}

GridFunction lq_field(const VectorField& field, double q) {
  check_exponent(q, "lq_field");
  if (field.empty()) throw std::invalid_argument("lq_field: empty vector field");
  const std::size_t n = field.front().size();
  for (const auto& c : field)
    if (c.size() != n) throw std::invalid_argument("lq_field: components on different domains");

  GridFunction out(n, 0.0);
  if (field.size() == 1) {  // single component: |f| bit-for-bit, any q
    for (std::size_t j = 0; j < n; ++j) out[j] = std::abs(field.front()[j]);
    return out;
  }
  if (std::isinf(q)) {
    for (const auto& c : field)
      for (std::size_t j = 0; j < n; ++j) out[j] = std::max(out[j], std::abs(c[j]));
    return out;
  }
  if (q == 2.0) {
    for (const auto& c : field)
      for (std::size_t j = 0; j < n; ++j) out[j] += c[j] * c[j];
    for (double& v : out) v = std::sqrt(v);
    return out;
  }
  for (const auto& c : field)
    for (std::size_t j = 0; j < n; ++j) out[j] += std::pow(std::abs(c[j]), q);
  for (double& v : out) v = std::pow(v, 1.0 / q);
  return out;
}

double lpq_norm(std::span<const double> masses, const VectorField& field, double p, double q) {
  check_exponent(p, "lpq_norm");
  check_exponent(q, "lpq_norm");
  const GridFunction norms = lq_field(field, q);
  return lp_norm(masses, norms, p);
}

double distribution(std::span<const double> masses, std::span<const double> g, double lambda) {
  if (g.size() != masses.size()) throw std::invalid_argument("distribution: size mismatch");
  double sum = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j)
    if (g[j] > lambda) sum += masses[j];
  return sum;
}

}  // namespace maxlab
