#pragma once

#include "maxlab/dunkl_transform.hpp"
#include "maxlab/semigroup.hpp"
#include "maxlab/sup_grid.hpp"

namespace maxlab {

/// A_alpha f = (1/alpha) integral_0^alpha T_t f dt; A_0 f = f.
GridFunction semigroup_average(const ContractionSemigroup& s, double alpha,
                               const GridFunction& f);

/// Pointwise max of |A_alpha f| over the sup grid (plus |f| for the
/// alpha -> 0 endpoint when enabled).
GridFunction semigroup_maximal(const ContractionSemigroup& s, const GridFunction& f,
                               const SupGrid& sup);

struct VectorMaximal {
  VectorField components;  // componentwise maximal functions
  GridFunction lq;         // pointwise l^q norm across them
};

/// Componentwise semigroup maximal operator (sup inside the norm).
VectorMaximal vector_semigroup_maximal(const ContractionSemigroup& s, const VectorField& f,
                                       const SupGrid& sup, double q);

/// sup_alpha of the l^q norm of the vector of averages (norm inside the sup).
GridFunction banach_maximal(const ContractionSemigroup& s, const VectorField& f,
                            const SupGrid& sup, double q);

/// Centered Hardy-Littlewood operator on a kappa = 0 grid: sup over the
/// radius nodes of ball averages of |f| (balls clipped to the box), plus the
/// r -> 0 endpoint |f| when enabled. Supports d <= 2.
GridFunction hardy_littlewood(const WeightedGrid& grid, const GridFunction& f,
                              const SupGrid& rsup);

/// Componentwise Hardy-Littlewood plus the l^q norm field.
VectorMaximal fefferman_stein(const WeightedGrid& grid, const VectorField& f,
                              const SupGrid& rsup, double q);

/// Dunkl maximal operator straight from its definition: translated ball
/// indicators integrated against f under the weighted measure, normalized by
/// the ball measure, sup over radii. Runs on the transform side (the
/// translation is a frequency-side multiplier), one inverse transform per
/// radius. Transform decay warnings are propagated through decay_warning.
GridFunction dunkl_maximal_direct(const DunklTransformer& transformer, const GridFunction& f,
                                  const SupGrid& rsup, bool* decay_warning = nullptr);

/// Literal route for one node and radius: materialize tau_x(chi_Br) via the
/// translation operator and integrate against f. Cross-checks the multiplier
/// route; far too slow for full fields.
double dunkl_ball_average_literal(const DunklTransformer& transformer, std::size_t node,
                                  double r, const GridFunction& f);

/// Heat-route Dunkl maximal operator: semigroup maximal of |f| under the
/// (positive) Dunkl heat semigroup.
GridFunction dunkl_heat_maximal(const ContractionSemigroup& heat, const GridFunction& f,
                                const SupGrid& sup);

}  // namespace maxlab
