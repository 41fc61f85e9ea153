// sweep.hpp — reproducible experiment orchestration: ensemble construction
// from frequency distributions, whole-network analysis, (Gamma, Delta) grids
// with persisted reports and heatmaps, and seeding scans over the coupling.

#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ctc/io.hpp"
#include "ctc/meanfield.hpp"
#include "ctc/parallel.hpp"
#include "ctc/rng.hpp"
#include "ctc/sync.hpp"

namespace ctc {

// ----------------------------------------------------------- ensembles -----

// One subgroup of CTCs with a target-frequency distribution. Frequencies are
// the uncoupled limit-cycle frequencies; each sample maps to a sector norm
// via m = sqrt((Omega/kappa)^2 - (omega/kappa)^2).
struct SubgroupSpec {
  enum class Dist { kUniform, kGaussian };
  int count = 0;
  Dist dist = Dist::kUniform;
  double lo = 0.0, hi = 0.0;      // uniform window
  double mean = 0.0, sigma = 0.0; // gaussian parameters
  std::uint64_t seed = 0;
};

struct EnsembleSpec {
  std::vector<SubgroupSpec> groups;
  double ratio = 0.9;  // Omega/kappa, shared by all CTCs
  double kappa = 1.0;
  // Optional angular spread of the initial phases: each CTC starts rotated by
  // a Gaussian angle (std in radians) within its y-z great circle instead of
  // exactly at (0, 0, m). Zero keeps the aligned default and leaves the
  // frequency stream untouched, so frozen seeds remain valid.
  double phase_jitter = 0.0;

  int total_count() const {
    int n = 0;
    for (const auto& g : groups) n += g.count;
    return n;
  }
};

struct BuiltEnsemble {
  NetworkConfig config;              // uncoupled; caller installs the coupling
  VectorXd initial;                  // (0, 0, m_alpha) per CTC
  std::vector<double> target_freqs;  // realized omega samples (rate units)
  std::vector<double> m_values;
};

namespace detail {

inline double sample_frequency(const SubgroupSpec& g, double omega_max, Rng& rng) {
  // Rejection keeps the distribution shape intact inside (0, omega_max);
  // clamping would pile mass on the boundary.
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const double w = g.dist == SubgroupSpec::Dist::kUniform ? rng.uniform(g.lo, g.hi)
                                                            : rng.normal(g.mean, g.sigma);
    if (w > 0.0 && w < omega_max) return w;
  }
  throw NumericalError("build_ensemble: rejection sampling failed; distribution support "
                       "barely intersects (0, Omega)");
}

}  // namespace detail

// Samples target frequencies, maps them to sector norms, and assembles the
// uncoupled network plus initial state. Identical specs (seeds included)
// produce bit-identical ensembles.
inline BuiltEnsemble build_ensemble(const EnsembleSpec& spec) {
  if (spec.groups.empty()) throw ValidationError("build_ensemble: no subgroups");
  if (!(spec.kappa > 0.0) || !(spec.ratio > 0.0))
    throw ValidationError("build_ensemble: need kappa > 0 and Omega/kappa > 0");
  const double omega_max = spec.ratio * spec.kappa;

  for (const auto& g : spec.groups) {
    if (g.count < 1) throw ValidationError("build_ensemble: empty subgroup");
    if (g.dist == SubgroupSpec::Dist::kUniform) {
      if (!(g.hi >= g.lo)) throw ValidationError("build_ensemble: uniform window inverted");
      if (g.hi <= 0.0 || g.lo >= omega_max)
        throw ValidationError("build_ensemble: uniform window lies outside (0, Omega)");
    } else {
      if (g.sigma < 0.0) throw ValidationError("build_ensemble: negative sigma");
      if (g.sigma == 0.0 && (g.mean <= 0.0 || g.mean >= omega_max))
        throw ValidationError("build_ensemble: degenerate Gaussian outside (0, Omega)");
    }
  }

  BuiltEnsemble built;
  const int n = spec.total_count();
  built.config.params.assign(static_cast<std::size_t>(n),
                             ModelParams{spec.ratio * spec.kappa, spec.kappa});
  built.config.gamma = MatrixXd::Zero(n, n);
  built.config.partition.reserve(static_cast<std::size_t>(n));
  built.target_freqs.reserve(static_cast<std::size_t>(n));
  built.m_values.reserve(static_cast<std::size_t>(n));

  for (std::size_t gi = 0; gi < spec.groups.size(); ++gi) {
    const SubgroupSpec& g = spec.groups[gi];
    Rng rng(g.seed);
    for (int k = 0; k < g.count; ++k) {
      const double w = detail::sample_frequency(g, omega_max, rng);
      const double w_over_kappa = w / spec.kappa;
      const double m = std::sqrt(spec.ratio * spec.ratio - w_over_kappa * w_over_kappa);
      built.target_freqs.push_back(w);
      built.m_values.push_back(m);
      built.config.partition.push_back(static_cast<int>(gi));
    }
  }

  std::vector<Vector3d> blochs;
  blochs.reserve(static_cast<std::size_t>(n));
  if (spec.phase_jitter > 0.0) {
    // Jitter angles come from a separate derived stream per subgroup so the
    // frequency draws are identical with and without jitter.
    std::size_t member = 0;
    for (std::size_t gi = 0; gi < spec.groups.size(); ++gi) {
      Rng jitter_rng(derive_seed(spec.groups[gi].seed, 0xA11CE));
      for (int k = 0; k < spec.groups[gi].count; ++k, ++member) {
        const double theta = jitter_rng.normal(0.0, spec.phase_jitter);
        const double m = built.m_values[member];
        blochs.emplace_back(0.0, m * std::sin(theta), m * std::cos(theta));
      }
    }
  } else {
    for (double m : built.m_values) blochs.emplace_back(0.0, 0.0, m);
  }
  built.initial = flat_state(blochs);
  return built;
}

// Two-band uniform ensemble: n/2 CTCs in [lo1, hi1], n/2 in [lo2, hi2].
inline EnsembleSpec two_band_ensemble(int n, double lo1, double hi1, double lo2, double hi2,
                                      std::uint64_t seed, double ratio = 0.9,
                                      double kappa = 1.0) {
  EnsembleSpec spec;
  spec.ratio = ratio;
  spec.kappa = kappa;
  spec.groups = {
      SubgroupSpec{n / 2, SubgroupSpec::Dist::kUniform, lo1, hi1, 0.0, 0.0, derive_seed(seed, 0)},
      SubgroupSpec{n - n / 2, SubgroupSpec::Dist::kUniform, lo2, hi2, 0.0, 0.0,
                   derive_seed(seed, 1)}};
  return spec;
}

// Two Gaussian subgroups with mean detuning `delta`, centered on `midpoint`.
inline EnsembleSpec gaussian_pair_ensemble(int n, double delta, double sigma,
                                           std::uint64_t seed, double midpoint = 0.45,
                                           double ratio = 0.9, double kappa = 1.0) {
  EnsembleSpec spec;
  spec.ratio = ratio;
  spec.kappa = kappa;
  spec.groups = {SubgroupSpec{n / 2, SubgroupSpec::Dist::kGaussian, 0.0, 0.0,
                              midpoint - 0.5 * delta, sigma, derive_seed(seed, 0)},
                 SubgroupSpec{n - n / 2, SubgroupSpec::Dist::kGaussian, 0.0, 0.0,
                              midpoint + 0.5 * delta, sigma, derive_seed(seed, 1)}};
  return spec;
}

// ------------------------------------------------------- ensemble JSON -----

inline json ensemble_to_json(const EnsembleSpec& spec) {
  json groups = json::array();
  for (const auto& g : spec.groups) {
    json jg{{"count", g.count},
            {"dist", g.dist == SubgroupSpec::Dist::kUniform ? "uniform" : "gaussian"},
            {"seed", g.seed}};
    if (g.dist == SubgroupSpec::Dist::kUniform) {
      jg["lo"] = g.lo;
      jg["hi"] = g.hi;
    } else {
      jg["mean"] = g.mean;
      jg["sigma"] = g.sigma;
    }
    groups.push_back(jg);
  }
  json j{{"ratio", spec.ratio}, {"kappa", spec.kappa}, {"groups", groups}};
  if (spec.phase_jitter > 0.0) j["phase_jitter"] = spec.phase_jitter;
  return j;
}

inline EnsembleSpec ensemble_from_json(const json& j);

namespace detail {
inline void check_keys(const json& j, const std::set<std::string>& allowed,
                       const std::string& context);
}

inline EnsembleSpec ensemble_from_json(const json& j) {
  detail::check_keys(j, {"ratio", "kappa", "groups", "phase_jitter"}, "ensemble");
  EnsembleSpec spec;
  spec.ratio = j.value("ratio", spec.ratio);
  spec.kappa = j.value("kappa", spec.kappa);
  spec.phase_jitter = j.value("phase_jitter", spec.phase_jitter);
  if (spec.phase_jitter < 0.0)
    throw ValidationError("ensemble: phase_jitter must be >= 0");
  if (!j.contains("groups") || !j.at("groups").is_array() || j.at("groups").empty())
    throw ValidationError("ensemble: needs a nonempty 'groups' array");
  for (const auto& jg : j.at("groups")) {
    detail::check_keys(jg, {"count", "dist", "seed", "lo", "hi", "mean", "sigma"},
                       "ensemble group");
    SubgroupSpec g;
    g.count = jg.at("count").get<int>();
    const std::string dist = jg.value("dist", "uniform");
    if (dist == "uniform") {
      g.dist = SubgroupSpec::Dist::kUniform;
      g.lo = jg.at("lo").get<double>();
      g.hi = jg.at("hi").get<double>();
    } else if (dist == "gaussian") {
      g.dist = SubgroupSpec::Dist::kGaussian;
      g.mean = jg.at("mean").get<double>();
      g.sigma = jg.at("sigma").get<double>();
    } else {
      throw ValidationError("ensemble: unknown distribution '" + dist + "'");
    }
    g.seed = jg.value("seed", std::uint64_t{0});
    spec.groups.push_back(g);
  }
  return spec;
}

// ------------------------------------------------------ network analysis ---

struct AnalysisOptions {
  double t_end = 1000.0;
  double window_t0 = 200.0;
  std::size_t n_samples = 4096;
  SyncThresholds thresholds;
  LyapunovOptions lyapunov;
  IntegrationOptions ode;
  bool compute_lyapunov = true;
};

struct AnalyzedRun {
  TrajectoryRecord traj;
  SyncReport report;
};

// Trajectory + full synchronization report for one network configuration.
inline AnalyzedRun analyze_network(const NetworkConfig& config, const VectorXd& x0,
                                   const AnalysisOptions& opts = {}) {
  config.validate();
  AnalyzedRun run;
  run.traj = integrate_network(config, x0, 0.0, opts.t_end, opts.n_samples, opts.ode);

  LyapunovResult lyap;
  if (opts.compute_lyapunov) {
    auto rhs = [&config](const VectorXd& x, VectorXd& dxdt, double) {
      rhs_network(x, dxdt, config);
    };
    LyapunovOptions lopts = opts.lyapunov;
    lopts.physical_bound = 1.5;  // per-CTC norms are conserved at <= 1
    lyap = max_lyapunov(rhs, x0, lopts, network_tangent_projector(config.size()));
  }
  run.report = build_sync_report(run.traj, opts.window_t0, opts.t_end, lyap, opts.thresholds);
  return run;
}

// -------------------------------------------------------------- plans ------

// Grid sweep over coupling strength Gamma and Gaussian-ensemble detuning
// Delta, or a spectral-gap scaling study over particle numbers N.
struct SweepPlan {
  std::string kind;  // "network-grid" | "spectral-scaling"

  // network-grid
  std::vector<double> gammas;
  std::vector<double> deltas;
  int n_ctc = 100;
  double sigma = 0.1;
  double midpoint = 0.45;
  std::uint64_t seed = 1;
  double ratio = 0.9;
  double kappa = 1.0;
  double t_end = 1000.0;
  double window_t0 = 200.0;
  std::size_t n_samples = 4096;
  SyncThresholds thresholds;
  double lyap_horizon = 1200.0;
  double lyap_transient = 200.0;

  // spectral-scaling
  std::vector<int> n_list;
  bool symmetric_only = false;
  int max_superop_dim = 4096;
};

namespace detail {

inline void check_keys(const json& j, const std::set<std::string>& allowed,
                       const std::string& context) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw ValidationError(context + ": unknown key '" + it.key() + "'");
}

}  // namespace detail

inline json plan_to_json(const SweepPlan& p) {
  json j{{"kind", p.kind}};
  if (p.kind == "network-grid") {
    j["gammas"] = p.gammas;
    j["deltas"] = p.deltas;
    j["n_ctc"] = p.n_ctc;
    j["sigma"] = p.sigma;
    j["midpoint"] = p.midpoint;
    j["seed"] = p.seed;
    j["ratio"] = p.ratio;
    j["kappa"] = p.kappa;
    j["t_end"] = p.t_end;
    j["window_t0"] = p.window_t0;
    j["n_samples"] = p.n_samples;
    j["thresholds"] = thresholds_to_json(p.thresholds);
    j["lyap_horizon"] = p.lyap_horizon;
    j["lyap_transient"] = p.lyap_transient;
  } else if (p.kind == "spectral-scaling") {
    j["n_list"] = p.n_list;
    j["ratio"] = p.ratio;
    j["kappa"] = p.kappa;
    j["symmetric_only"] = p.symmetric_only;
    j["max_superop_dim"] = p.max_superop_dim;
  } else {
    throw ValidationError("plan_to_json: unknown plan kind '" + p.kind + "'");
  }
  return j;
}

inline SweepPlan plan_from_json(const json& j) {
  SweepPlan p;
  if (!j.contains("kind")) throw ValidationError("plan: missing 'kind'");
  p.kind = j.at("kind").get<std::string>();
  if (p.kind == "network-grid") {
    detail::check_keys(j, {"kind", "gammas", "deltas", "n_ctc", "sigma", "midpoint", "seed",
                           "ratio", "kappa", "t_end", "window_t0", "n_samples", "thresholds",
                           "lyap_horizon", "lyap_transient"},
                       "plan");
    p.gammas = j.at("gammas").get<std::vector<double>>();
    p.deltas = j.at("deltas").get<std::vector<double>>();
    p.n_ctc = j.value("n_ctc", p.n_ctc);
    p.sigma = j.value("sigma", p.sigma);
    p.midpoint = j.value("midpoint", p.midpoint);
    p.seed = j.value("seed", p.seed);
    p.ratio = j.value("ratio", p.ratio);
    p.kappa = j.value("kappa", p.kappa);
    p.t_end = j.value("t_end", p.t_end);
    p.window_t0 = j.value("window_t0", p.window_t0);
    p.n_samples = j.value("n_samples", p.n_samples);
    if (j.contains("thresholds")) p.thresholds = thresholds_from_json(j.at("thresholds"));
    p.lyap_horizon = j.value("lyap_horizon", p.lyap_horizon);
    p.lyap_transient = j.value("lyap_transient", p.lyap_transient);
    if (p.gammas.empty() || p.deltas.empty())
      throw ValidationError("plan: network-grid needs nonempty gamma and delta axes");
  } else if (p.kind == "spectral-scaling") {
    detail::check_keys(j, {"kind", "n_list", "ratio", "kappa", "symmetric_only",
                           "max_superop_dim"},
                       "plan");
    p.n_list = j.at("n_list").get<std::vector<int>>();
    p.ratio = j.value("ratio", p.ratio);
    p.kappa = j.value("kappa", p.kappa);
    p.symmetric_only = j.value("symmetric_only", p.symmetric_only);
    p.max_superop_dim = j.value("max_superop_dim", p.max_superop_dim);
    if (p.n_list.empty()) throw ValidationError("plan: spectral-scaling needs n_list");
  } else {
    throw ValidationError("plan: unknown kind '" + p.kind + "'");
  }
  return p;
}

// ------------------------------------------------------------ run_grid -----

struct GridResult {
  MatrixXd cbar_map;    // rows: gammas, cols: deltas (NaN where quarantined)
  MatrixXd lambda_map;
  std::vector<std::string> errors;   // quarantined point diagnostics
  json scaling_summary;              // spectral-scaling output
};

// Executes a plan. Grid points run in parallel, each writing an isolated
// point directory; completed points are skipped unless `force`. An index line
// is appended per completed point.
inline GridResult run_grid(const SweepPlan& plan, const std::string& out_dir,
                           bool force = false, unsigned workers = 0) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  write_json(out_dir + "/plan.json", plan_to_json(plan));

  GridResult result;
  std::mutex index_mutex;
  const std::string index_path = out_dir + "/index.jsonl";

  auto append_index = [&](const json& line) {
    std::lock_guard<std::mutex> lock(index_mutex);
    std::ofstream out(index_path, std::ios_base::app);
    out << line.dump() << "\n";
  };

  if (plan.kind == "spectral-scaling") {
    std::vector<SpaceSpectrum> scans;
    scans.reserve(plan.n_list.size());
    for (int n : plan.n_list) {
      const ModelParams params{plan.ratio * plan.kappa, plan.kappa};
      SpaceSpectrum space = dominant_over_space(n, params, plan.symmetric_only,
                                                plan.max_superop_dim, workers);
      const std::string dir = out_dir + "/N_" + std::to_string(n);
      write_sector_summary_csv(dir + "/sectors.csv", space);
      write_spectrum_csv(dir + "/eigenvalues.csv", space);
      append_index({{"N", n},
                    {"dir", dir},
                    {"re_lambda1", space.dominant().lambda1->real()},
                    {"im_lambda1", space.dominant().lambda1->imag()}});
      scans.push_back(std::move(space));
    }
    result.scaling_summary = spectral_summary_json(scans);
    // Linear fit of Re lambda1 against 1/N.
    VectorXd inv_n(static_cast<long>(scans.size())), re(static_cast<long>(scans.size()));
    for (std::size_t i = 0; i < scans.size(); ++i) {
      inv_n(static_cast<long>(i)) = 1.0 / scans[i].dominant().sector.n_particles;
      re(static_cast<long>(i)) = scans[i].dominant().lambda1->real();
    }
    if (scans.size() >= 2) {
      const LinearFit fit = linear_fit(inv_n, re);
      result.scaling_summary["fit_re_vs_inv_n"] = {
          {"intercept", fit.intercept}, {"slope", fit.slope}, {"r2", fit.r2}};
    }
    write_json(out_dir + "/scaling.json", result.scaling_summary);
    return result;
  }

  if (plan.kind != "network-grid")
    throw ValidationError("run_grid: unknown plan kind '" + plan.kind + "'");

  const std::size_t n_gamma = plan.gammas.size();
  const std::size_t n_delta = plan.deltas.size();
  result.cbar_map = MatrixXd::Constant(static_cast<long>(n_gamma), static_cast<long>(n_delta),
                                       std::numeric_limits<double>::quiet_NaN());
  result.lambda_map = result.cbar_map;
  std::vector<std::string> point_errors(n_gamma * n_delta);

  parallel_for(n_gamma * n_delta, [&](std::size_t idx) {
    const std::size_t gi = idx / n_delta;
    const std::size_t di = idx % n_delta;
    const double gamma = plan.gammas[gi];
    const double delta = plan.deltas[di];
    const std::string dir =
        out_dir + "/g" + std::to_string(gi) + "_d" + std::to_string(di);
    const std::string report_path = dir + "/report.json";

    try {
      if (!force && fs::exists(report_path)) {
        const json existing = read_json(report_path);
        result.cbar_map(static_cast<long>(gi), static_cast<long>(di)) =
            existing.at("mean_pearson").get<double>();
        result.lambda_map(static_cast<long>(gi), static_cast<long>(di)) =
            existing.at("lambda").get<double>();
        return;
      }

      EnsembleSpec spec = gaussian_pair_ensemble(plan.n_ctc, delta, plan.sigma,
                                                 derive_seed(plan.seed, idx), plan.midpoint,
                                                 plan.ratio, plan.kappa);
      BuiltEnsemble built = build_ensemble(spec);
      built.config.gamma = uniform_coupling(plan.n_ctc, gamma * plan.kappa);

      AnalysisOptions opts;
      opts.t_end = plan.t_end;
      opts.window_t0 = plan.window_t0;
      opts.n_samples = plan.n_samples;
      opts.thresholds = plan.thresholds;
      opts.lyapunov.horizon = plan.lyap_horizon;
      opts.lyapunov.transient = plan.lyap_transient;
      const AnalyzedRun run = analyze_network(built.config, built.initial, opts);

      json report = sync_report_to_json(run.report);
      report["provenance"] = {{"gamma", gamma},
                              {"delta", delta},
                              {"seed", derive_seed(plan.seed, idx)},
                              {"ensemble", ensemble_to_json(spec)},
                              {"target_freqs", built.target_freqs},
                              {"m_values", built.m_values},
                              {"rel_tol", opts.ode.rel_tol},
                              {"abs_tol", opts.ode.abs_tol},
                              {"plan_kind", plan.kind}};
      write_json(report_path, report);

      result.cbar_map(static_cast<long>(gi), static_cast<long>(di)) = run.report.cbar;
      result.lambda_map(static_cast<long>(gi), static_cast<long>(di)) = run.report.lambda;
      append_index({{"point", {gi, di}},
                    {"gamma", gamma},
                    {"delta", delta},
                    {"dir", dir},
                    {"regime", regime_name(run.report.regime)},
                    {"cbar", run.report.cbar},
                    {"lambda", run.report.lambda}});
    } catch (const std::exception& e) {
      point_errors[idx] = "point (" + std::to_string(gamma) + ", " + std::to_string(delta) +
                          "): " + e.what();
      try {
        write_json(dir + "/error.json", json{{"error", e.what()}});
      } catch (...) {
      }
    }
  }, workers);

  for (auto& err : point_errors)
    if (!err.empty()) result.errors.push_back(std::move(err));

  write_matrix_csv(out_dir + "/cbar_heatmap.csv", result.cbar_map, plan.gammas, plan.deltas,
                   "gamma", "delta");
  write_matrix_csv(out_dir + "/lambda_heatmap.csv", result.lambda_map, plan.gammas,
                   plan.deltas, "gamma", "delta");
  return result;
}

// --------------------------------------------------------- seeding scan ----

struct SeedingPoint {
  double gamma = 0.0;
  Regime regime = Regime::kUnsynchronized;
  int group1_dead = 0;
  int group2_dead = 0;
  double cbar = 0.0;
  double lambda = 0.0;
};

// Analyzes the same ensemble under increasing all-to-all coupling.
inline std::vector<SeedingPoint> seeding_scan(const EnsembleSpec& spec,
                                              const std::vector<double>& gammas,
                                              const AnalysisOptions& opts = {}) {
  for (std::size_t i = 1; i < gammas.size(); ++i)
    if (!(gammas[i] > gammas[i - 1]))
      throw ValidationError("seeding_scan: gamma list must be increasing");

  std::vector<SeedingPoint> points(gammas.size());
  parallel_for(gammas.size(), [&](std::size_t i) {
    BuiltEnsemble built = build_ensemble(spec);
    const int n = built.config.size();
    built.config.gamma = uniform_coupling(n, gammas[i] * spec.kappa);
    const AnalyzedRun run = analyze_network(built.config, built.initial, opts);

    SeedingPoint& pt = points[i];
    pt.gamma = gammas[i];
    pt.regime = run.report.regime;
    pt.cbar = run.report.cbar;
    pt.lambda = run.report.lambda;
    for (int a = 0; a < n; ++a) {
      if (!run.report.dead[static_cast<std::size_t>(a)]) continue;
      (built.config.partition[static_cast<std::size_t>(a)] == 0 ? pt.group1_dead
                                                                : pt.group2_dead)++;
    }
  });
  return points;
}

// First coupling strength in [gamma_lo, gamma_hi] (step `gamma_step`) at
// which every CTC of subgroup 0 stops oscillating. Lyapunov spectra are not
// needed here, only dead/alive flags, so points run without them.
inline std::optional<double> detect_group1_melting(const EnsembleSpec& spec, double gamma_lo,
                                                   double gamma_hi, double gamma_step,
                                                   AnalysisOptions opts = {}) {
  if (!(gamma_step > 0.0) || !(gamma_hi > gamma_lo))
    throw ValidationError("detect_group1_melting: bad scan range");
  opts.compute_lyapunov = false;

  std::vector<double> gammas;
  for (double g = gamma_lo; g <= gamma_hi + 1e-12; g += gamma_step) gammas.push_back(g);

  std::vector<int> group1_alive(gammas.size(), -1);
  parallel_for(gammas.size(), [&](std::size_t i) {
    BuiltEnsemble built = build_ensemble(spec);
    const int n = built.config.size();
    built.config.gamma = uniform_coupling(n, gammas[i] * spec.kappa);
    const AnalyzedRun run = analyze_network(built.config, built.initial, opts);
    int alive = 0;
    for (int a = 0; a < n; ++a)
      if (built.config.partition[static_cast<std::size_t>(a)] == 0 &&
          !run.report.dead[static_cast<std::size_t>(a)])
        ++alive;
    group1_alive[i] = alive;
  });

  for (std::size_t i = 0; i < gammas.size(); ++i)
    if (group1_alive[i] == 0) return gammas[i];
  return std::nullopt;
}

}  // namespace ctc
