// ctc — command-line front end: exact Liouvillian spectra and evolution,
// mean-field trajectories, coupled-network synchronization analysis,
// parameter sweeps, phase diagrams, trajectory classification, and
// figure-reproduction presets.
//
// Exit codes: 0 success, 2 validation error, 3 numerical error. The
// `classify` subcommand encodes the detected regime as 10 + regime index
// (see --help) so scripts can branch on it.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ctc/presets.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitRegimeBase = 10;

struct GlobalFlags {
  bool dry_run = false;
};

void print_checks(const std::vector<ctc::CheckResult>& checks) {
  for (const auto& c : checks)
    std::printf("[%s] %s%s%s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                c.detail.empty() ? "" : " — ", c.detail.c_str());
}

ctc::json checks_to_manifest(const std::vector<ctc::CheckResult>& checks) {
  ctc::json arr = ctc::json::array();
  for (const auto& c : checks)
    arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return ctc::json{{"checks", arr}, {"version", ctc::kVersion}};
}

// ----------------------------------------------------------- spectrum ------

struct SpectrumArgs {
  int n = 0;
  double omega = 0.9;
  double kappa = 1.0;
  bool symmetric_only = false;
  int cap = 4096;
  unsigned workers = 0;
  std::string out_eigen, out_sectors, out_json;
};

int cmd_spectrum(const SpectrumArgs& a, const GlobalFlags& g) {
  ctc::ModelParams params{a.omega, a.kappa};
  params.validate();
  if (a.n < 1) throw ctc::ValidationError("spectrum: --N must be >= 1");
  if (g.dry_run) {
    std::printf("spectrum: N=%d omega=%g kappa=%g %s (dry run)\n", a.n, a.omega, a.kappa,
                a.symmetric_only ? "symmetric-only" : "full");
    return kExitOk;
  }
  const ctc::SpaceSpectrum space =
      ctc::dominant_over_space(a.n, params, a.symmetric_only, a.cap, a.workers);
  if (!a.out_eigen.empty()) ctc::write_spectrum_csv(a.out_eigen, space);
  if (!a.out_sectors.empty()) ctc::write_sector_summary_csv(a.out_sectors, space);
  if (!a.out_json.empty())
    ctc::write_json(a.out_json, ctc::spectral_summary_json({space}));
  const auto& dom = space.dominant();
  std::printf("N=%d %s: dominant lambda1 = %.12g %+.12gi from sector 2J=%d (m=%g), gap=%.12g\n",
              a.n, a.symmetric_only ? "symmetric" : "full space", dom.lambda1->real(),
              dom.lambda1->imag(), dom.sector.two_j, dom.sector.m(), dom.gap());
  return kExitOk;
}

// ------------------------------------------------------------- evolve ------

struct EvolveArgs {
  int n = 0;
  int two_j = -1;
  double m = -1.0;
  double omega = 0.9;
  double kappa = 1.0;
  double t_end = 50.0;
  std::size_t samples = 1024;
  std::string out;
};

int cmd_evolve(const EvolveArgs& a, const GlobalFlags& g) {
  ctc::ModelParams params{a.omega, a.kappa};
  params.validate();
  if (a.n < 1) throw ctc::ValidationError("evolve: --N must be >= 1");
  int two_j = a.two_j;
  if (two_j < 0) {
    if (a.m < 0.0) throw ctc::ValidationError("evolve: give either --two-j or --m");
    two_j = static_cast<int>(std::lround(a.m * a.n));
  }
  const ctc::SpinSector sector = ctc::representative_sector(a.n, two_j);
  if (g.dry_run) {
    std::printf("evolve: N=%d 2J=%d m=%g t_end=%g (dry run)\n", a.n, two_j, sector.m(),
                a.t_end);
    return kExitOk;
  }
  const auto block = ctc::build_block(sector, params);
  const auto grid = ctc::uniform_grid(0.0, a.t_end, a.samples);
  const auto traj =
      ctc::evolve_exact(block, ctc::highest_weight_density(sector.dim()), grid);
  if (!a.out.empty()) {
    ctc::MatrixXd table(traj.times.size(), 4);
    table.col(0) = traj.times;
    table.col(1) = traj.mx;
    table.col(2) = traj.my;
    table.col(3) = traj.mz;
    ctc::write_plain_matrix_csv(a.out, table);
  }
  std::printf("evolved N=%d 2J=%d (m=%g) to t=%g; trace drift %.3g, mz(end)=%.6g\n", a.n,
              two_j, sector.m(), a.t_end, traj.max_trace_drift,
              traj.mz(traj.mz.size() - 1));
  return kExitOk;
}

// ---------------------------------------------------------- meanfield ------

struct MeanfieldArgs {
  double m = 0.1;
  double omega = 0.9;
  double kappa = 1.0;
  double t_end = 1000.0;
  std::size_t samples = 4096;
  std::string out, portrait;
};

int cmd_meanfield(const MeanfieldArgs& a, const GlobalFlags& g) {
  ctc::ModelParams params{a.omega, a.kappa};
  params.validate();
  if (!(a.m > 0.0) || a.m > 1.0)
    throw ctc::ValidationError("meanfield: --m must lie in (0, 1]");
  if (g.dry_run) {
    std::printf("meanfield: m=%g omega=%g kappa=%g t_end=%g (dry run)\n", a.m, a.omega,
                a.kappa, a.t_end);
    return kExitOk;
  }
  const auto rec =
      ctc::integrate_single(params, ctc::Vector3d(0, 0, a.m), 0.0, a.t_end, a.samples);
  if (!a.out.empty()) ctc::write_trajectory_csv(a.out, rec);
  if (!a.portrait.empty()) {
    const ctc::PhasePortrait pp = ctc::phase_portrait(rec);
    ctc::MatrixXd pq(pp.p.size(), 2);
    pq.col(0) = pp.p;
    pq.col(1) = pp.q;
    ctc::write_plain_matrix_csv(a.portrait, pq);
  }
  const auto rep = ctc::fixed_points(a.m, params);
  std::printf("meanfield m=%g: norm drift %.3g", a.m, rec.norm_drift(0));
  if (rep.omega_pred)
    std::printf(", predicted oscillation frequency %.6g (angular)", *rep.omega_pred);
  std::printf("\n");
  return kExitOk;
}

// ------------------------------------------------------------ network ------

struct NetworkArgs {
  std::string ensemble_file;
  std::string two_band;       // "lo1:hi1:lo2:hi2"
  std::string gaussian_pair;  // "delta:sigma[:midpoint]"
  int n = 20;
  double ratio = 0.9;
  double kappa = 1.0;
  std::uint64_t seed = 1;
  double gamma = 0.0;
  double phase_jitter = -1.0;  // < 0: keep the spec's value
  std::string coupling = "all";  // all | intra | none
  double t_end = 1000.0;
  double window_t0 = 200.0;
  std::size_t samples = 4096;
  bool no_lyapunov = false;
  std::string out_traj, out_binary, report, spectra, pearson;
};

std::vector<double> parse_colon_list(const std::string& s, const std::string& what) {
  std::vector<double> vals;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ':')) {
    try {
      vals.push_back(std::stod(tok));
    } catch (...) {
      throw ctc::ValidationError(what + ": cannot parse '" + tok + "'");
    }
  }
  return vals;
}

int cmd_network(const NetworkArgs& a, const GlobalFlags& g) {
  if (a.coupling != "all" && a.coupling != "intra" && a.coupling != "none")
    throw ctc::ValidationError("network: --coupling must be all, intra, or none");
  if (a.window_t0 >= a.t_end)
    throw ctc::ValidationError("network: --t0 must be smaller than --t-end");
  ctc::EnsembleSpec spec;
  if (!a.ensemble_file.empty()) {
    spec = ctc::ensemble_from_json(ctc::read_json(a.ensemble_file));
  } else if (!a.gaussian_pair.empty()) {
    const auto v = parse_colon_list(a.gaussian_pair, "--gaussian-pair");
    if (v.size() < 2 || v.size() > 3)
      throw ctc::ValidationError("--gaussian-pair wants delta:sigma[:midpoint]");
    spec = ctc::gaussian_pair_ensemble(a.n, v[0], v[1], a.seed,
                                       v.size() == 3 ? v[2] : ctc::kGaussianMidpoint,
                                       a.ratio, a.kappa);
  } else {
    std::vector<double> v{0.2, 0.25, 0.75, 0.85};
    if (!a.two_band.empty()) {
      v = parse_colon_list(a.two_band, "--two-band");
      if (v.size() != 4) throw ctc::ValidationError("--two-band wants lo1:hi1:lo2:hi2");
    }
    spec = ctc::two_band_ensemble(a.n, v[0], v[1], v[2], v[3], a.seed, a.ratio, a.kappa);
  }
  if (a.phase_jitter >= 0.0) spec.phase_jitter = a.phase_jitter;

  if (g.dry_run) {
    ctc::build_ensemble(spec);  // validates
    std::printf("network: n=%d gamma=%g coupling=%s t_end=%g (dry run)\n",
                spec.total_count(), a.gamma, a.coupling.c_str(), a.t_end);
    return kExitOk;
  }

  ctc::BuiltEnsemble built = ctc::build_ensemble(spec);
  const int n = built.config.size();
  if (a.coupling == "all")
    built.config.gamma = ctc::uniform_coupling(n, a.gamma * spec.kappa);
  else if (a.coupling == "intra")
    built.config.gamma = ctc::block_coupling(built.config.partition, a.gamma * spec.kappa);

  ctc::AnalysisOptions opts;
  opts.t_end = a.t_end;
  opts.window_t0 = a.window_t0;
  opts.n_samples = a.samples;
  opts.compute_lyapunov = !a.no_lyapunov;
  const ctc::AnalyzedRun run = ctc::analyze_network(built.config, built.initial, opts);

  if (!a.out_traj.empty()) ctc::write_trajectory_csv(a.out_traj, run.traj);
  if (!a.out_binary.empty()) ctc::write_trajectory_binary(a.out_binary, run.traj);
  if (!a.spectra.empty()) ctc::write_spectra_csv(a.spectra, run.report.freqs);
  if (!a.pearson.empty()) ctc::write_plain_matrix_csv(a.pearson, run.report.pearson);
  if (!a.report.empty()) {
    ctc::json jr = ctc::sync_report_to_json(run.report);
    jr["provenance"] = {{"ensemble", ctc::ensemble_to_json(spec)},
                        {"gamma", a.gamma},
                        {"coupling", a.coupling},
                        {"seed", a.seed}};
    ctc::write_json(a.report, jr);
  }
  std::printf("network n=%d gamma=%g (%s): regime=%s cbar=%.4g lambda=%.4g max|m|=%.6g\n", n,
              a.gamma, a.coupling.c_str(), ctc::regime_name(run.report.regime),
              run.report.cbar, run.report.lambda, run.traj.max_norm);
  return kExitOk;
}

// -------------------------------------------------------------- sweep ------

struct SweepArgs {
  std::string plan_file;
  std::string out_dir = "sweep_out";
  bool force = false;
  unsigned workers = 0;
};

int cmd_sweep(const SweepArgs& a, const GlobalFlags& g) {
  const ctc::SweepPlan plan = ctc::plan_from_json(ctc::read_json(a.plan_file));
  if (g.dry_run) {
    std::printf("sweep: kind=%s -> %s (dry run)\n", plan.kind.c_str(), a.out_dir.c_str());
    return kExitOk;
  }
  const ctc::GridResult result = ctc::run_grid(plan, a.out_dir, a.force, a.workers);
  for (const auto& err : result.errors) std::fprintf(stderr, "quarantined %s\n", err.c_str());
  std::printf("sweep complete: %s (%zu quarantined)\n", a.out_dir.c_str(),
              result.errors.size());
  return kExitOk;
}

// ------------------------------------------------------- phase diagram -----

struct PhaseArgs {
  double m_min = 0.05, m_max = 1.0;
  std::size_t m_steps = 20;
  double ratio_min = 0.1, ratio_max = 2.0;
  std::size_t ratio_steps = 20;
  double kappa = 1.0;
  std::size_t cross_check = 0;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_phase_diagram(const PhaseArgs& a, const GlobalFlags& g) {
  if (a.m_steps < 2 || a.ratio_steps < 2)
    throw ctc::ValidationError("phase-diagram: need at least 2 steps per axis");
  std::vector<double> m_values, ratio_values;
  for (std::size_t i = 0; i < a.m_steps; ++i)
    m_values.push_back(a.m_min + (a.m_max - a.m_min) * static_cast<double>(i) /
                                     static_cast<double>(a.m_steps - 1));
  for (std::size_t j = 0; j < a.ratio_steps; ++j)
    ratio_values.push_back(a.ratio_min + (a.ratio_max - a.ratio_min) *
                                             static_cast<double>(j) /
                                             static_cast<double>(a.ratio_steps - 1));
  if (g.dry_run) {
    std::printf("phase-diagram: %zux%zu grid (dry run)\n", a.m_steps, a.ratio_steps);
    return kExitOk;
  }
  const ctc::PhaseDiagram pd = ctc::phase_diagram(m_values, ratio_values, a.kappa);
  if (!a.out.empty())
    ctc::write_matrix_csv(a.out, pd.labels.cast<double>(), m_values, ratio_values, "m",
                          "omega_over_kappa");
  int tc = 0, melted = 0;
  for (long i = 0; i < pd.labels.rows(); ++i)
    for (long j = 0; j < pd.labels.cols(); ++j)
      (pd.labels(i, j) == 1 ? tc : melted)++;
  std::printf("phase diagram %zux%zu: %d time-crystal cells, %d melted\n", a.m_steps,
              a.ratio_steps, tc, melted);
  if (a.cross_check > 0) {
    const auto cells = ctc::phase_diagram_cross_check(pd, a.cross_check, a.seed, a.kappa);
    bool all_ok = true;
    for (const auto& cell : cells) all_ok = all_ok && cell.consistent;
    std::printf("cross-check on %zu cells: %s\n", cells.size(), all_ok ? "consistent" : "INCONSISTENT");
    if (!all_ok) return kExitNumerical;
  }
  return kExitOk;
}

// ------------------------------------------------------------ classify -----

struct ClassifyArgs {
  std::string traj_file;
  double t0 = 200.0;
  double t1 = -1.0;  // default: end of data
  std::string report;
  double lambda = std::numeric_limits<double>::quiet_NaN();
  ctc::SyncThresholds th;
};

int cmd_classify(const ClassifyArgs& a, const GlobalFlags& g) {
  ctc::TrajectoryRecord rec;
  if (a.traj_file.size() > 4 && a.traj_file.substr(a.traj_file.size() - 4) == ".bin")
    rec = ctc::read_trajectory_binary(a.traj_file);
  else
    rec = ctc::read_trajectory_csv(a.traj_file);
  const double t1 = a.t1 > 0 ? a.t1 : rec.times(rec.samples() - 1);
  if (g.dry_run) {
    std::printf("classify: %s, %d CTCs, window [%g, %g] (dry run)\n", a.traj_file.c_str(),
                rec.n_ctc, a.t0, t1);
    return kExitOk;
  }

  const ctc::MatrixXd window = ctc::mz_window(rec, a.t0, t1);
  const ctc::PearsonResult pearson = ctc::pearson_matrix(window, a.th.dead_var);
  const double cbar = ctc::mean_pearson(pearson.c);
  const auto freqs = ctc::dominant_frequencies(window, rec.dt(), a.th.dead_var);

  ctc::Regime regime;
  if (std::isfinite(a.lambda)) {
    regime = ctc::classify_regime(pearson.c, cbar, pearson.dead, a.lambda, a.th);
  } else {
    // No dynamics available from a bare trajectory file: dead/alive flags
    // take over the role of the Lyapunov sign for the death regimes.
    const bool all_dead =
        std::all_of(pearson.dead.begin(), pearson.dead.end(), [](bool d) { return d; });
    const bool any_dead =
        std::any_of(pearson.dead.begin(), pearson.dead.end(), [](bool d) { return d; });
    if (all_dead)
      regime = ctc::Regime::kOscillationDeath;
    else if (any_dead)
      regime = ctc::Regime::kChimeraPartialDeath;
    else
      regime = ctc::classify_regime(pearson.c, cbar, pearson.dead, 0.0, a.th);
  }

  ctc::SyncReport rep;
  rep.pearson = pearson.c;
  rep.degenerate = pearson.degenerate;
  rep.dead = pearson.dead;
  rep.cbar = cbar;
  rep.freqs = freqs;
  rep.lambda = std::isfinite(a.lambda) ? a.lambda : 0.0;
  rep.regime = regime;
  rep.clusters = ctc::sync_clusters(pearson.c, a.th.edge, a.th.min_cluster_size);
  rep.window_t0 = a.t0;
  rep.window_t1 = t1;
  rep.thresholds = a.th;
  if (!a.report.empty()) ctc::write_json(a.report, ctc::sync_report_to_json(rep));

  std::printf("regime: %s (cbar=%.4g, %zu clusters)\n", ctc::regime_name(regime), cbar,
              rep.clusters.size());
  return kExitRegimeBase + static_cast<int>(regime);
}

// -------------------------------------------------------------- figure -----

struct FigureArgs {
  std::string preset;
  std::string out_dir;
  std::uint64_t seed = 0;  // 0: preset default
  bool quick = false;
  unsigned workers = 0;
};

int cmd_figure(const FigureArgs& a, const GlobalFlags& g) {
  const std::string out = a.out_dir.empty() ? "figure_" + a.preset : a.out_dir;
  if (g.dry_run) {
    std::printf("figure %s -> %s (dry run)\n", a.preset.c_str(), out.c_str());
    return kExitOk;
  }
  std::vector<ctc::CheckResult> checks;
  if (a.preset == "fig1a") {
    checks = ctc::preset_phase_diagram(out);
  } else if (a.preset == "fig2") {
    checks = ctc::preset_spectral_scaling(out, a.quick, a.workers);
  } else if (a.preset == "fig3") {
    checks = ctc::preset_chimera(out, a.seed ? a.seed : ctc::kChimeraSeed);
  } else if (a.preset == "fig4bd") {
    checks = ctc::preset_cluster_sync(out, a.seed ? a.seed : ctc::kClusterSeed);
  } else if (a.preset == "fig4ef") {
    checks = ctc::preset_regime_map(out, a.quick, a.seed ? a.seed : ctc::kRegimeMapSeed,
                                    a.workers);
  } else if (a.preset == "figs1a") {
    checks = ctc::preset_phase_portrait(out);
  } else if (a.preset == "figs1b") {
    checks = ctc::preset_exact_vs_meanfield(out);
  } else if (a.preset == "figs2") {
    checks = ctc::preset_seeding(out, a.seed ? a.seed : ctc::kSeedingSeed);
  } else if (a.preset == "figs3s4") {
    checks = ctc::preset_regime_exemplars(out, a.seed ? a.seed : ctc::kRegimeMapSeed);
  } else {
    throw ctc::ValidationError(
        "unknown figure preset '" + a.preset +
        "' (fig1a, fig2, fig3, fig4bd, fig4ef, figs1a, figs1b, figs2, figs3s4)");
  }
  ctc::write_json(out + "/manifest.json", checks_to_manifest(checks));
  print_checks(checks);
  std::printf("bundle written to %s\n", out.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ctc — continuous-time-crystal spectra, mean-field dynamics, and "
               "synchronization analysis"};
  app.set_config("--config", "", "read options from a config file (flags take precedence)");
  app.allow_config_extras(CLI::config_extras_mode::error);  // no silent typos
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_flag("--dry-run", flags.dry_run, "validate inputs and exit without computing");
  app.fallthrough();  // let --dry-run / --config appear after the subcommand

  SpectrumArgs sa;
  auto* spectrum = app.add_subcommand("spectrum", "Liouvillian eigenspectra per spin-J sector");
  spectrum->add_option("--N", sa.n, "particle count")->required();
  spectrum->add_option("--omega", sa.omega, "drive amplitude (units of kappa)");
  spectrum->add_option("--kappa", sa.kappa, "dissipation rate");
  auto* full_flag = spectrum->add_flag("--full", "all spin-J sectors (default)");
  spectrum->add_flag("--symmetric-only", sa.symmetric_only, "only the J = N/2 block")
      ->excludes(full_flag);
  spectrum->add_option("--cap", sa.cap, "dense-eigensolver dimension cap");
  spectrum->add_option("--workers", sa.workers, "parallel sector workers");
  spectrum->add_option("--out-eigen", sa.out_eigen, "eigenvalue table CSV");
  spectrum->add_option("--out-sectors", sa.out_sectors, "per-sector summary CSV");
  spectrum->add_option("--out-json", sa.out_json, "dominant-eigenvalue JSON summary");

  EvolveArgs ea;
  auto* evolve = app.add_subcommand("evolve", "exact density-matrix evolution of one block");
  evolve->add_option("--N", ea.n, "particle count")->required();
  evolve->add_option("--two-j", ea.two_j, "sector 2J");
  evolve->add_option("--m", ea.m, "sector norm m = 2J/N (alternative to --two-j)");
  evolve->add_option("--omega", ea.omega, "drive amplitude");
  evolve->add_option("--kappa", ea.kappa, "dissipation rate");
  evolve->add_option("--t-end", ea.t_end, "final time");
  evolve->add_option("--samples", ea.samples, "output grid size");
  evolve->add_option("--out", ea.out, "CSV output (t, mx, my, mz)");

  MeanfieldArgs ma;
  auto* meanfield = app.add_subcommand("meanfield", "single-CTC mean-field trajectory");
  meanfield->add_option("--m", ma.m, "sector norm in (0, 1]")->required();
  meanfield->add_option("--omega", ma.omega, "drive amplitude");
  meanfield->add_option("--kappa", ma.kappa, "dissipation rate");
  meanfield->add_option("--t-end", ma.t_end, "final time");
  meanfield->add_option("--samples", ma.samples, "output grid size");
  meanfield->add_option("--out", ma.out, "trajectory CSV");
  meanfield->add_option("--portrait", ma.portrait, "phase-portrait (P, Q) CSV");

  NetworkArgs na;
  auto* network = app.add_subcommand("network", "coupled-CTC network run + sync report");
  network->add_option("--ensemble", na.ensemble_file, "ensemble spec JSON file");
  network->add_option("--two-band", na.two_band, "uniform bands lo1:hi1:lo2:hi2");
  network->add_option("--gaussian-pair", na.gaussian_pair, "delta:sigma[:midpoint]");
  network->add_option("--n", na.n, "CTC count (builtin ensembles)");
  network->add_option("--ratio", na.ratio, "Omega/kappa");
  network->add_option("--kappa", na.kappa, "dissipation rate");
  network->add_option("--seed", na.seed, "ensemble sampling seed");
  network->add_option("--phase-jitter", na.phase_jitter,
                      "Gaussian spread of initial phases (radians)");
  network->add_option("--gamma", na.gamma, "coupling strength (units of kappa)");
  network->add_option("--coupling", na.coupling, "all | intra | none");
  network->add_option("--t-end", na.t_end, "final time");
  network->add_option("--t0", na.window_t0, "analysis window start");
  network->add_option("--samples", na.samples, "trajectory grid size");
  network->add_flag("--no-lyapunov", na.no_lyapunov, "skip the Lyapunov estimate");
  network->add_option("--out-traj", na.out_traj, "trajectory CSV");
  network->add_option("--out-binary", na.out_binary, "trajectory binary dump");
  network->add_option("--report", na.report, "SyncReport JSON");
  network->add_option("--spectra", na.spectra, "per-CTC FFT spectra CSV");
  network->add_option("--pearson", na.pearson, "Pearson matrix CSV");

  SweepArgs swa;
  auto* sweep = app.add_subcommand("sweep", "execute a sweep plan");
  sweep->add_option("--plan", swa.plan_file, "plan JSON file")->required();
  sweep->add_option("--out", swa.out_dir, "output directory");
  sweep->add_flag("--force", swa.force, "recompute completed points");
  sweep->add_option("--workers", swa.workers, "worker pool size (or CTC_WORKERS)");

  PhaseArgs pa;
  auto* phase = app.add_subcommand("phase-diagram", "fixed-point phase labels over (m, Omega/kappa)");
  phase->add_option("--m-min", pa.m_min);
  phase->add_option("--m-max", pa.m_max);
  phase->add_option("--m-steps", pa.m_steps);
  phase->add_option("--ratio-min", pa.ratio_min);
  phase->add_option("--ratio-max", pa.ratio_max);
  phase->add_option("--ratio-steps", pa.ratio_steps);
  phase->add_option("--kappa", pa.kappa);
  phase->add_option("--cross-check", pa.cross_check, "integration cross-check cell count");
  phase->add_option("--seed", pa.seed, "cross-check cell sampling seed");
  phase->add_option("--out", pa.out, "label matrix CSV");

  ClassifyArgs ca;
  auto* classify = app.add_subcommand(
      "classify", "classify a trajectory file; exit code 10+regime "
                  "(10 unsynchronized, 11 chimera, 12 cluster-sync, 13 chimera+partial-"
                  "oscillation-death, 14 oscillation-death, 15 chaotic, 16 complete-sync)");
  classify->add_option("--traj", ca.traj_file, "trajectory CSV or .bin")->required();
  classify->add_option("--t0", ca.t0, "window start");
  classify->add_option("--t1", ca.t1, "window end (default: last sample)");
  classify->add_option("--lambda", ca.lambda, "externally computed Lyapunov exponent");
  classify->add_option("--report", ca.report, "SyncReport JSON output");
  classify->add_option("--edge", ca.th.edge, "cluster edge threshold on |C|");
  classify->add_option("--eps-lambda", ca.th.eps_lambda, "Lyapunov zero band");
  classify->add_option("--dead-var", ca.th.dead_var, "dead-oscillator variance floor");
  classify->add_option("--complete-cbar", ca.th.complete_cbar, "complete-sync mean threshold");
  classify->add_option("--unsync-cbar", ca.th.unsync_cbar, "unsynchronized mean threshold");
  classify->add_option("--cluster-cover", ca.th.cluster_cover, "cluster coverage fraction");

  FigureArgs fa;
  auto* figure = app.add_subcommand("figure", "figure-reproduction presets with manifest");
  figure->add_option("preset", fa.preset,
                     "fig1a | fig2 | fig3 | fig4bd | fig4ef | figs1a | figs1b | figs2 | figs3s4")
      ->required();
  figure->add_option("--out", fa.out_dir, "bundle directory (default figure_<preset>)");
  figure->add_option("--seed", fa.seed, "override the preset's frozen seed");
  figure->add_flag("--quick", fa.quick, "reduced-size variant where applicable");
  figure->add_option("--workers", fa.workers, "parallel workers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(sa, flags);
    if (evolve->parsed()) return cmd_evolve(ea, flags);
    if (meanfield->parsed()) return cmd_meanfield(ma, flags);
    if (network->parsed()) return cmd_network(na, flags);
    if (sweep->parsed()) return cmd_sweep(swa, flags);
    if (phase->parsed()) return cmd_phase_diagram(pa, flags);
    if (classify->parsed()) return cmd_classify(ca, flags);
    if (figure->parsed()) return cmd_figure(fa, flags);
  } catch (const ctc::ValidationError& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return kExitValidation;
  } catch (const ctc::NumericalError& e) {
    std::fprintf(stderr, "numerical error: %s\n", e.what());
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumerical;
  }
  return kExitOk;
}
