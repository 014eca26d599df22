#pragma once

#include <span>
#include <vector>

namespace maxlab {

enum class ReflectionFamily { trivial, rank1_z2, product_z2d };

/// Finite reduced root system closed under negation, with a nonnegative
/// reflection-invariant multiplicity. Only the sign-flip families are
/// representable: the empty system, rank-1 Z2, and the coordinate product
/// Z2^d whose roots are exactly {+-e_1, ..., +-e_d}.
class RootSystem {
 public:
  static RootSystem trivial(int dimension);
  static RootSystem rank1(double kappa);
  static RootSystem product_z2(std::vector<double> kappa_per_axis);

  ReflectionFamily family() const { return family_; }
  int dimension() const { return dimension_; }

  std::size_t root_count() const { return multiplicity_.size(); }
  std::span<const double> root(std::size_t k) const;
  double multiplicity(std::size_t k) const { return multiplicity_[k]; }

  // multiplicity attached to +-e_axis; 0 for the trivial family
  double axis_kappa(int axis) const;

  // gamma = (1/2) sum over the full system of the multiplicities; the weight
  // is homogeneous of degree 2*gamma and balls scale like r^(d + 2*gamma)
  double gamma() const;

  // prod over R of |<x, alpha>|^kappa(alpha); empty product = 1
  double weight_at(std::span<const double> x) const;

 private:
  RootSystem(ReflectionFamily family, int dimension, std::vector<double> roots,
             std::vector<double> multiplicity);
  void validate() const;

  ReflectionFamily family_;
  int dimension_;
  std::vector<double> roots_;         // root_count x dimension, row major
  std::vector<double> multiplicity_;  // per root
};

inline double gamma_index(const RootSystem& rs) { return rs.gamma(); }
inline double weight_at(const RootSystem& rs, std::span<const double> x) {
  return rs.weight_at(x);
}

}  // namespace maxlab
