#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace maxlab {

/// Geometric discretization of a sup over radii or times: nodes
/// g_min * ratio^k, k = 0..count-1, optionally joined by the analytic
/// zero-limit endpoint (alpha -> 0 average = f, r -> 0 average = |f|).
/// Every discrete sup is a lower bound of the true one.
struct SupGrid {
  enum class Kind { radius, time };

  Kind kind = Kind::time;
  double g_min = 1e-2;
  double ratio = 1.5;
  int count = 16;
  bool include_zero_limit = true;

  std::vector<double> nodes() const {
    if (!(g_min > 0.0) || !(ratio > 1.0) || count < 2)
      throw std::invalid_argument("SupGrid: need g_min > 0, ratio > 1, count >= 2");
    std::vector<double> out(static_cast<std::size_t>(count));
    double g = g_min;
    for (int k = 0; k < count; ++k) {
      out[static_cast<std::size_t>(k)] = g;
      g *= ratio;
    }
    return out;
  }

  double g_max() const { return g_min * std::pow(ratio, count - 1); }

  static SupGrid geometric(Kind kind, double g_min, double g_max, double ratio,
                           bool include_zero = true) {
    if (!(g_max >= g_min)) throw std::invalid_argument("SupGrid: g_max < g_min");
    SupGrid s;
    s.kind = kind;
    s.g_min = g_min;
    s.ratio = ratio;
    s.count = 1 + static_cast<int>(std::floor(std::log(g_max / g_min) / std::log(ratio) +
                                              1e-9));
    if (s.count < 2) s.count = 2;
    s.include_zero_limit = include_zero;
    return s;
  }

  /// Node superset: same endpoints, sqrt of the ratio.
  SupGrid refined() const {
    SupGrid s = *this;
    s.ratio = std::sqrt(ratio);
    s.count = 2 * count - 1;
    return s;
  }
};

}  // namespace maxlab
