#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "maxlab/dunkl_heat.hpp"
#include "maxlab/dunkl_kernel.hpp"
#include "maxlab/dunkl_transform.hpp"
#include "maxlab/function_family.hpp"
#include "maxlab/maximal.hpp"
#include "maxlab/norms.hpp"
#include "maxlab/parallel.hpp"
#include "maxlab/report.hpp"
#include "maxlab/verify.hpp"

namespace maxlab::cli {

namespace {

struct CommonOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string outdir = "out";
  int threads = 0;
  std::optional<double> p, q;
  std::optional<std::string> kappa;
  std::optional<int> trials;
  std::optional<int> points;
  std::optional<double> half_width;
};

void add_common(CLI::App* sub, CommonOptions& o) {
  sub->add_option("--config", o.config_path, "flat key=value config file");
  sub->add_option("--seed", o.seed, "seed override (wins over the config file)");
  sub->add_option("--out", o.outdir, "output directory for reports");
  sub->add_option("--threads", o.threads, "worker thread cap (0 = hardware)");
  sub->add_option("--p", o.p, "Lebesgue exponent p");
  sub->add_option("--q", o.q, "sequence exponent q");
  sub->add_option("--kappa", o.kappa, "comma-separated multiplicities per axis");
  sub->add_option("--trials", o.trials, "trial count override");
  sub->add_option("--points", o.points, "grid points per axis override");
  sub->add_option("--half-width", o.half_width, "grid half-width override");
}

// key=value lines; '#' comments; whitespace tolerated
std::pair<std::vector<std::pair<std::string, std::string>>, std::vector<int>> parse_config_file(
    const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("", 0, "cannot open config file: " + path);
  std::vector<std::pair<std::string, std::string>> entries;
  std::vector<int> lines;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(line, lineno,
                        "config line " + std::to_string(lineno) + " is not key=value: " + line);
    entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    lines.push_back(lineno);
  }
  return {entries, lines};
}

TrialConfig build_config(const CommonOptions& o) {
  TrialConfig cfg;
  if (!o.config_path.empty()) {
    const auto [entries, lines] = parse_config_file(o.config_path);
    cfg = TrialConfig::from_entries(entries, lines);
  }
  if (o.seed) cfg.seed = *o.seed;
  if (o.p) cfg.p = *o.p;
  if (o.q) cfg.q = *o.q;
  if (o.trials) cfg.trials = *o.trials;
  if (o.points) cfg.points = *o.points;
  if (o.half_width) cfg.half_width = *o.half_width;
  if (o.kappa) {
    std::vector<std::pair<std::string, std::string>> kv{{"kappa", *o.kappa}};
    const TrialConfig parsed = TrialConfig::from_entries(kv);
    cfg.kappa = parsed.kappa;
    if (cfg.kappa.size() > 1) cfg.dimension = static_cast<int>(cfg.kappa.size());
  }
  return cfg;
}

int finish_suite(const VerificationReport& report, const CommonOptions& o) {
  emit_report(report, o.outdir);
  std::printf("%s: worst_case=%s%s%s pass=%s (%lld ms, %zu trials)\n", report.suite.c_str(),
              format_double(report.worst_case).c_str(), report.bound ? " bound=" : "",
              report.bound ? format_double(*report.bound).c_str() : "",
              report.pass ? "true" : "false", static_cast<long long>(report.runtime_ms),
              report.per_trial.size());
  return report.pass ? 0 : 1;
}

// --- kernel subcommand -----------------------------------------------------

struct KernelOptions {
  double kappa = 0.0;
  double x = 1.0;
  double y = 1.0;
  bool imaginary = false;
  int slice = 0;
  double slice_halfwidth = 5.0;
  std::string outdir = "out";
};

int run_kernel(const KernelOptions& o) {
  const std::complex<double> y =
      o.imaginary ? std::complex<double>(0.0, o.y) : std::complex<double>(o.y, 0.0);
  if (o.slice > 0) {
    std::filesystem::create_directories(o.outdir);
    const auto path = std::filesystem::path(o.outdir) / "kernel-slice.csv";
    std::ofstream os(path, std::ios::binary);
    if (!os) {
      std::fprintf(stderr, "cannot open %s\n", path.c_str());
      return 2;
    }
    os << "x,y,re_e,im_e\n";
    for (int i = 0; i < o.slice; ++i) {
      const double x =
          -o.slice_halfwidth + (2.0 * o.slice_halfwidth) * (i + 0.5) / o.slice;
      const auto v = dunkl_kernel_rank1(o.kappa, x, y);
      os << format_double(x) << ',' << format_double(o.y) << ',' << format_double(v.real())
         << ',' << format_double(v.imag()) << '\n';
    }
    std::printf("wrote %s\n", path.c_str());
    return 0;
  }
  const auto v = dunkl_kernel_rank1(o.kappa, o.x, y);
  if (v.imag() == 0.0)
    std::printf("%.10g\n", v.real());
  else
    std::printf("%.10g%+.10gi\n", v.real(), v.imag());
  return 0;
}

// --- transform-check / heat-check -------------------------------------------

int run_transform_check(const CommonOptions& o) {
  const TrialConfig cfg = build_config(o);
  VerificationReport r;
  r.suite = "transform-check";
  r.config = cfg.entries();
  const auto t0 = std::chrono::steady_clock::now();

  const WeightedGrid grid(RootSystem::product_z2(cfg.kappa_or_zero()), cfg.half_width,
                          cfg.points);
  const SpectralGrid sgrid = SpectralGrid::mirror(grid);
  const DunklTransformer transformer(grid, sgrid);

  GridFunction f(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    double q2 = 0.0;
    for (int a = 0; a < grid.dimension(); ++a) {
      const double c = grid.node_coord(j, a);
      q2 += c * c;
    }
    f[j] = std::exp(-0.5 * q2);
  }

  const TransformResult fhat = transformer.forward(f);
  const double n_f = lp_norm(grid, std::span<const double>(f), 2.0);
  const double n_fhat = lp_norm(sgrid, fhat.values, 2.0);
  const double plancherel = std::abs(n_fhat - n_f) / n_f;

  const TransformResult back = transformer.inverse(fhat.values);
  double diff2 = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double d = back.values[j].real() - f[j];
    diff2 += grid.quad_weights()[j] * (d * d + back.values[j].imag() * back.values[j].imag());
  }
  const double roundtrip = std::sqrt(diff2) / n_f;

  const double tol = 1e-3;
  r.per_trial.push_back({0, plancherel, tol, plancherel <= tol});
  r.per_trial.push_back({1, roundtrip, tol, roundtrip <= tol});
  r.worst_case = std::max(plancherel, roundtrip);
  r.bound = tol;
  r.pass = plancherel <= tol && roundtrip <= tol && !fhat.decay_warning;
  r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  std::printf("plancherel_defect=%.3e roundtrip_error=%.3e decay_warning=%d\n", plancherel,
              roundtrip, fhat.decay_warning ? 1 : 0);
  return finish_suite(r, o);
}

int run_heat_check(const CommonOptions& o) {
  const TrialConfig cfg = build_config(o);
  VerificationReport r;
  r.suite = "heat-check";
  r.config = cfg.entries();
  const auto t0 = std::chrono::steady_clock::now();

  const WeightedGrid grid(RootSystem::product_z2(cfg.kappa_or_zero()), cfg.half_width,
                          cfg.points);
  const SupGrid tsup = cfg.time_sup();
  DunklHeatSemigroup heat(grid, tsup.nodes());
  heat.prepare();

  // mass on the guarded region: |x| <= L/4, sqrt(t) <= L/8
  const double t_cap = (grid.half_width() / 8.0) * (grid.half_width() / 8.0);
  // contract checks sample only well-resolved kernels: sqrt(2t) >= 8h
  const double t_floor = 32.0 * grid.spacing() * grid.spacing();
  double mass_lo = 2.0, mass_hi = 0.0;
  const GridFunction ones(grid.size(), 1.0);
  for (double t : tsup.nodes()) {
    if (t > t_cap) break;
    if (t < t_floor) continue;
    const GridFunction ht = heat.apply(t, ones);
    for (std::size_t j = 0; j < grid.size(); ++j) {
      bool core = true;
      for (int a = 0; a < grid.dimension(); ++a)
        if (std::abs(grid.node_coord(j, a)) > grid.half_width() / 4.0) core = false;
      if (!core) continue;
      mass_lo = std::min(mass_lo, ht[j]);
      mass_hi = std::max(mass_hi, ht[j]);
    }
  }
  const bool mass_ok = mass_lo >= 1.0 - cfg.tol_mass && mass_hi <= 1.0 + 1e-6;

  // semigroup law and contraction on a smooth compact sample
  GridFunction f(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    double q2 = 0.0;
    for (int a = 0; a < grid.dimension(); ++a) {
      const double c = grid.node_coord(j, a);
      q2 += c * c;
    }
    f[j] = std::exp(-q2);
  }
  std::vector<double> resolved;
  for (double tn : tsup.nodes())
    if (tn >= t_floor && tn <= heat.max_time() / 2.0) resolved.push_back(tn);
  if (resolved.empty()) resolved.push_back(std::min(t_cap, heat.max_time() / 2.0));
  const double s = resolved[resolved.size() / 3];
  const double t = resolved[resolved.size() / 2];
  double law = 0.0;
  {
    const GridFunction a = heat.apply(t, heat.apply(s, f));
    const GridFunction b = heat.apply(t + s, f);
    double num = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const double d = a[j] - b[j];
      num += grid.quad_weights()[j] * d * d;
    }
    law = std::sqrt(num) / lp_norm(grid, std::span<const double>(f), 2.0);
  }
  const std::vector<GridFunction> fs = {f, ones};
  std::vector<double> sample_ts;
  for (std::size_t i = 0; i < resolved.size(); i += 2) sample_ts.push_back(resolved[i]);
  const ContractionCheck cc = check_contraction(heat, sample_ts, fs, cfg.tol_contract);
  const PositivityCheck pc = check_positivity(heat, sample_ts, fs, cfg.tol_pos);

  r.per_trial.push_back({0, 1.0 - mass_lo, cfg.tol_mass, mass_ok});
  r.per_trial.push_back({1, law, cfg.tol_semigroup, law <= cfg.tol_semigroup});
  r.per_trial.push_back({2, std::max(cc.worst_l1_ratio, cc.worst_linf_ratio) - 1.0,
                         cfg.tol_contract, cc.pass});
  r.per_trial.push_back({3, -pc.min_value, cfg.tol_pos, pc.pass});
  r.worst_case = 0.0;
  for (const auto& row : r.per_trial) r.worst_case = std::max(r.worst_case, row.constant);
  r.pass = mass_ok && law <= cfg.tol_semigroup && cc.pass && pc.pass;
  r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  std::printf("mass=[%.6f,%.6f] law_defect=%.3e l1_ratio=%.6f linf_ratio=%.6f min_val=%.3e\n",
              mass_lo, mass_hi, law, cc.worst_l1_ratio, cc.worst_linf_ratio, pc.min_value);
  return finish_suite(r, o);
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"numerical laboratory for semigroup maximal operators and Dunkl analysis"};
  app.require_subcommand(1);

  CommonOptions scalar_o, vector_o, banach_o, fs_o, dunkl_o, dom_o, conj_o, tr_o, heat_o;
  KernelOptions kernel_o;

  auto* scalar = app.add_subcommand("verify-scalar-hds", "scalar maximal inequalities");
  add_common(scalar, scalar_o);
  auto* vector = app.add_subcommand("verify-vector-hds", "L^p(l^q) maximal inequalities");
  add_common(vector, vector_o);
  auto* banach = app.add_subcommand("verify-banach-hds", "Banach-norm maximal inequalities");
  add_common(banach, banach_o);
  auto* fs = app.add_subcommand("verify-fs", "Fefferman-Stein constants, kappa = 0");
  add_common(fs, fs_o);
  auto* dunkl = app.add_subcommand("verify-dunkl-fs", "Dunkl Fefferman-Stein constants");
  add_common(dunkl, dunkl_o);
  auto* dom = app.add_subcommand("check-domination", "maximal-operator domination ratios");
  add_common(dom, dom_o);
  auto* conj = app.add_subcommand("explore-conjecture", "weak L^1(l^q) constant explorer");
  add_common(conj, conj_o);

  auto* kernel = app.add_subcommand("kernel", "evaluate the rank-1 kernel");
  kernel->add_option("--kappa", kernel_o.kappa, "multiplicity");
  kernel->add_option("--x", kernel_o.x, "first argument");
  kernel->add_option("--y", kernel_o.y, "second argument (real part or imaginary magnitude)");
  kernel->add_flag("--imaginary", kernel_o.imaginary, "interpret y as i*y");
  kernel->add_option("--slice", kernel_o.slice, "dump a CSV slice with this many x samples");
  kernel->add_option("--slice-halfwidth", kernel_o.slice_halfwidth, "slice range [-w, w]");
  kernel->add_option("--out", kernel_o.outdir, "output directory");

  auto* trc = app.add_subcommand("transform-check", "Plancherel and inversion defects");
  add_common(trc, tr_o);
  auto* htc = app.add_subcommand("heat-check", "heat kernel mass/semigroup/contraction");
  add_common(htc, heat_o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::cout << app.help();
      return 0;
    }
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    const auto with_threads = [](const CommonOptions& o) { set_max_threads(o.threads); };
    if (scalar->parsed()) {
      with_threads(scalar_o);
      return finish_suite(verify_scalar_hds(build_config(scalar_o)), scalar_o);
    }
    if (vector->parsed()) {
      with_threads(vector_o);
      return finish_suite(verify_vector_hds(build_config(vector_o)), vector_o);
    }
    if (banach->parsed()) {
      with_threads(banach_o);
      return finish_suite(verify_banach_hds(build_config(banach_o)), banach_o);
    }
    if (fs->parsed()) {
      with_threads(fs_o);
      return finish_suite(verify_fefferman_stein(build_config(fs_o)), fs_o);
    }
    if (dunkl->parsed()) {
      with_threads(dunkl_o);
      return finish_suite(verify_dunkl_fs(build_config(dunkl_o)), dunkl_o);
    }
    if (dom->parsed()) {
      with_threads(dom_o);
      return finish_suite(check_pointwise_domination(build_config(dom_o)), dom_o);
    }
    if (conj->parsed()) {
      with_threads(conj_o);
      return finish_suite(explore_conjecture(build_config(conj_o)), conj_o);
    }
    if (kernel->parsed()) return run_kernel(kernel_o);
    if (trc->parsed()) {
      with_threads(tr_o);
      return run_transform_check(tr_o);
    }
    if (htc->parsed()) {
      with_threads(heat_o);
      return run_heat_check(heat_o);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error";
    if (!e.key.empty()) std::cerr << " (key '" << e.key << "'";
    if (e.line > 0) std::cerr << ", line " << e.line;
    if (!e.key.empty()) std::cerr << ")";
    std::cerr << ": " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace maxlab::cli
