#pragma once

#include <string>

#include "maxlab/grid.hpp"
#include "maxlab/rng.hpp"

namespace maxlab {

/// Parametric test functions; parameters fully determine the grid samples,
/// so a witness that records (kind, params) replays exactly.
struct TestFunction {
  enum class Kind { gaussian, indicator, bump_sum, plateau };

  Kind kind = Kind::gaussian;
  std::vector<double> params;  // gaussian: center..., sigma; indicator: lo..., hi...;
                               // bump_sum: triples (center, sigma, amp) per axis-0;
                               // plateau: halfwidth, edge

  static const char* kind_name(Kind k);
  static Kind kind_from_name(const std::string& name);
};

GridFunction materialize(const TestFunction& tf, const WeightedGrid& grid);

/// Random member of the mixed family (Gaussians, indicators, bump sums),
/// supported inside [-support, support]^d.
TestFunction random_test_function(Rng& rng, const WeightedGrid& grid, double support);

/// Random nonnegative vector on a finite space; mixes flat, spiky and
/// one-hot shapes so weak-type sups see extreme mass profiles.
std::vector<double> random_finite_function(Rng& rng, std::size_t n);

}  // namespace maxlab
