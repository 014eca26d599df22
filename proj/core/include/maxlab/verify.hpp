#pragma once

#include <span>
#include <stdexcept>
#include <string>

#include "maxlab/report.hpp"
#include "maxlab/sup_grid.hpp"

namespace maxlab {

/// Configuration / usage error carrying the offending key (and config-file
/// line when it came from a file).
struct ConfigError : std::runtime_error {
  ConfigError(std::string key_, int line_, const std::string& what_)
      : std::runtime_error(what_), key(std::move(key_)), line(line_) {}
  std::string key;
  int line = 0;  // 0 when not from a file
};

/// One reproducible experiment description. Identical configs give
/// byte-identical scientific content in the report (see decisions on
/// runtime_ms). The flat key=value echo round-trips through from_entries.
struct TrialConfig {
  std::uint64_t seed = 1;
  int trials = 100;
  int space_min = 2;  // Markov state-space sizes
  int space_max = 8;
  int n_seq = 4;  // components of a vector field
  double p = 2.0;
  double q = 2.0;
  // time sup grid for finite semigroups
  double alpha_min = 1.0 / 64.0;
  double alpha_max = 256.0;
  double alpha_ratio = 1.35;
  // weighted grid
  int dimension = 1;
  double half_width = 8.0;
  int points = 512;
  std::vector<double> kappa;  // per axis; empty = all zero
  // radius sup grid
  double r_min = 0.05;
  double r_max = 4.0;
  double r_ratio = 1.02;
  // heat time grid (t_max is the box guard (L/4)^2)
  double t_min = 2e-3;
  double t_ratio = 1.6;
  // tolerance set
  double tol_contract = 1e-3;
  double tol_pos = 1e-9;
  double tol_semigroup = 1e-3;
  double tol_mass = 1e-3;
  double envelope_slope = 0.05;

  std::vector<std::pair<std::string, std::string>> entries() const;
  static TrialConfig from_entries(
      std::span<const std::pair<std::string, std::string>> entries,
      std::span<const int> lines = {});

  SupGrid alpha_sup() const;
  SupGrid radius_sup() const;
  SupGrid time_sup() const;  // heat times; nodes shared with the semigroup
  std::vector<double> kappa_or_zero() const;
};

// The experiment suites. Names match the CLI subcommands.
VerificationReport verify_scalar_hds(const TrialConfig& cfg);
VerificationReport verify_vector_hds(const TrialConfig& cfg);
VerificationReport verify_banach_hds(const TrialConfig& cfg);
VerificationReport verify_fefferman_stein(const TrialConfig& cfg);
VerificationReport verify_dunkl_fs(const TrialConfig& cfg);
VerificationReport check_pointwise_domination(const TrialConfig& cfg);
VerificationReport explore_conjecture(const TrialConfig& cfg);

/// Re-runs a recorded witness through the public operations and returns the
/// recomputed constant (1e-12 reproducible on finite spaces, 1e-6 on grids).
double replay_witness(const std::string& witness_json);

/// Exact weak-type constant on a finite measure space:
/// max over the distinct values v of M of v * m({M >= v}) / denom.
double weak_type_constant(std::span<const double> masses, std::span<const double> maximal,
                          double denom);

/// Least-squares slope of y against x.
double fitted_slope(std::span<const double> x, std::span<const double> y);

/// Hopf-Dunford-Schwartz strong-type bound 2 (p/(p-1))^(1/p).
double hds_strong_bound(double p);

}  // namespace maxlab
