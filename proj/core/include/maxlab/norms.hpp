#pragma once

#include <span>

#include "maxlab/grid.hpp"

namespace maxlab {

/// (sum_j m_j |f_j|^p)^(1/p); p = infinity gives max_j |f_j|. p < 1 rejected.
double lp_norm(std::span<const double> masses, std::span<const double> f, double p);
double lp_norm(std::span<const double> masses, const ComplexGridFunction& f, double p);

/// Pointwise l^q norm across the components of a vector field.
GridFunction lq_field(const VectorField& field, double q);

/// Mixed norm: L^p (outer exponent 1/p) of the pointwise l^q norm.
double lpq_norm(std::span<const double> masses, const VectorField& field, double p, double q);

/// Measure of the superlevel set {g > lambda}.
double distribution(std::span<const double> masses, std::span<const double> g, double lambda);

inline double lp_norm(const WeightedGrid& g, std::span<const double> f, double p) {
  return lp_norm(g.quad_weights(), f, p);
}
inline double lp_norm(const WeightedGrid& g, const ComplexGridFunction& f, double p) {
  return lp_norm(g.quad_weights(), f, p);
}
inline double lp_norm(const FiniteMeasureSpace& s, std::span<const double> f, double p) {
  return lp_norm(s.masses(), f, p);
}
inline double lpq_norm(const WeightedGrid& g, const VectorField& field, double p, double q) {
  return lpq_norm(g.quad_weights(), field, p, q);
}
inline double lpq_norm(const FiniteMeasureSpace& s, const VectorField& field, double p, double q) {
  return lpq_norm(s.masses(), field, p, q);
}

}  // namespace maxlab
