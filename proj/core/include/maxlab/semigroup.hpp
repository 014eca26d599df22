#pragma once

#include <memory>
#include <span>
#include <vector>

#include "maxlab/grid.hpp"
#include "maxlab/markov.hpp"

namespace maxlab {

/// One-parameter family T_t contracting both L^1 and L^infinity, with an
/// averaged-integral capability integral_0^alpha T_t f dt. apply(0, f) = f.
class ContractionSemigroup {
 public:
  virtual ~ContractionSemigroup() = default;

  virtual std::size_t size() const = 0;
  virtual std::span<const double> masses() const = 0;
  virtual GridFunction apply(double t, const GridFunction& f) const = 0;
  virtual GridFunction integrate(double alpha, const GridFunction& f) const = 0;

  /// Averages (1/alpha) integral_0^alpha T_t f dt for each alpha in the list
  /// (alpha = 0 entries give f). Default loops over integrate.
  virtual std::vector<GridFunction> averages(std::span<const double> alphas,
                                             const GridFunction& f) const;
};

class IdentitySemigroup final : public ContractionSemigroup {
 public:
  explicit IdentitySemigroup(FiniteMeasureSpace space) : space_(std::move(space)) {}

  std::size_t size() const override { return space_.size(); }
  std::span<const double> masses() const override { return space_.masses(); }
  GridFunction apply(double, const GridFunction& f) const override { return f; }
  GridFunction integrate(double alpha, const GridFunction& f) const override;

 private:
  FiniteMeasureSpace space_;
};

class MarkovSemigroup final : public ContractionSemigroup {
 public:
  MarkovSemigroup(MarkovGenerator generator, FiniteMeasureSpace space);
  /// Counting measure, the exact setting for the finite experiments.
  explicit MarkovSemigroup(MarkovGenerator generator);

  std::size_t size() const override { return space_.size(); }
  std::span<const double> masses() const override { return space_.masses(); }
  GridFunction apply(double t, const GridFunction& f) const override;
  GridFunction integrate(double alpha, const GridFunction& f) const override;

  const MarkovGenerator& generator() const { return generator_; }

 private:
  MarkovGenerator generator_;
  FiniteMeasureSpace space_;
};

struct ContractionCheck {
  double worst_l1_ratio = 0.0;
  double worst_linf_ratio = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// max over samples of ||T_t f||_1 / ||f||_1 and ||T_t f||_inf / ||f||_inf.
ContractionCheck check_contraction(const ContractionSemigroup& s, std::span<const double> ts,
                                   const std::vector<GridFunction>& fs, double tol);

struct PositivityCheck {
  double min_value = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// T_t f >= -tol pointwise for the sampled nonnegative f.
PositivityCheck check_positivity(const ContractionSemigroup& s, std::span<const double> ts,
                                 const std::vector<GridFunction>& fs, double tol);

}  // namespace maxlab
