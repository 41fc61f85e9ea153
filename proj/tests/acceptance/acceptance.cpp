// acceptance — end-to-end verification binary. Runs the thirteen acceptance
// criteria (or a subset given as command-line arguments) and prints one
// PASS/FAIL line per criterion, with sub-check details indented. Exits with
// the number of failed criteria.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ctc/presets.hpp"
#include "oracles.hpp"

using namespace ctc;

namespace {

struct Criterion {
  int id;
  std::string name;
  std::function<std::vector<CheckResult>()> run;
};

// ---------------------------------------------------------- criterion 1 ----

std::vector<CheckResult> run_sum_rule() {
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 20; ++n) {
    std::uint64_t total = 0;
    for (const auto& s : enumerate_sectors(n))
      total += *s.multiplicity * static_cast<std::uint64_t>(s.dim());
    if (total != (std::uint64_t{1} << n)) {
      ok = false;
      detail += "N=" + std::to_string(n) + " ";
    }
  }
  return {{"sum rule over sectors equals 2^N for N <= 20", ok, detail}};
}

// ---------------------------------------------------------- criterion 2 ----

std::vector<CheckResult> run_sector_oracle() {
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 8; ++n) {
    const auto counts = oracle::sector_counts_bruteforce(n);
    const auto sectors = enumerate_sectors(n);
    if (counts.size() != sectors.size()) ok = false;
    for (const auto& s : sectors)
      if (!counts.count(s.two_j) || counts.at(s.two_j) != *s.multiplicity) {
        ok = false;
        detail += "N=" + std::to_string(n) + ",2J=" + std::to_string(s.two_j) + " ";
      }
  }
  return {{"sector enumeration matches product-basis diagonalization, N <= 8", ok, detail}};
}

// ---------------------------------------------------------- criterion 3 ----

std::vector<CheckResult> run_fixed_point_grid() {
  bool residual_ok = true, eigen_ok = true;
  double worst_residual = 0.0, worst_eigen = 0.0;
  for (int i = 1; i <= 20; ++i) {
    const double m = i * 0.05;  // (0, 1]
    for (int j = 1; j <= 20; ++j) {
      const double ratio = 0.1 + j * 0.095;  // (0.1, 2]
      const ModelParams p{ratio, 1.0};
      const auto rep = fixed_points(m, p);
      if (rep.degenerate) continue;

      std::vector<Vector3d> physical;
      std::vector<std::vector<cxd>> closed_forms;
      const cxd r = p.kappa * std::sqrt(cxd(m * m - ratio * ratio, 0.0));
      if (rep.m1_physical) {
        physical.push_back(rep.m1[0]);
        closed_forms.push_back({cxd(0, 0), r, -r});
        physical.push_back(rep.m1[1]);
        closed_forms.push_back({cxd(0, 0), r, -r});
      }
      if (rep.m2_physical) {
        physical.push_back(rep.m2[0]);
        closed_forms.push_back({cxd(0, 0), r, r});
        physical.push_back(rep.m2[1]);
        closed_forms.push_back({cxd(0, 0), -r, -r});
      }
      auto rhs = [&p](const VectorXd& x) {
        const Vector3d d = rhs_single(Vector3d(x(0), x(1), x(2)), p);
        return VectorXd(d);
      };
      for (std::size_t k = 0; k < physical.size(); ++k) {
        const double res = rhs_single(physical[k], p).cwiseAbs().maxCoeff();
        worst_residual = std::max(worst_residual, res);
        if (res >= 1e-12) residual_ok = false;

        VectorXd x(3);
        x << physical[k](0), physical[k](1), physical[k](2);
        Eigen::EigenSolver<MatrixXd> es(numerical_jacobian(rhs, x));
        const double dist = oracle::multiset_match_distance(
            closed_forms[k], oracle::to_vector(es.eigenvalues()));
        worst_eigen = std::max(worst_eigen, dist);
        if (dist >= 1e-6) eigen_ok = false;
      }
    }
  }
  return {{"rhs residual < 1e-12 at physical fixed points", residual_ok,
           "worst = " + std::to_string(worst_residual)},
          {"numerical Jacobian eigenvalues match closed forms to 1e-6", eigen_ok,
           "worst = " + std::to_string(worst_eigen)}};
}

// ---------------------------------------------------------- criterion 4 ----

std::vector<CheckResult> run_frequency_law() {
  struct Pt {
    double m, ratio;
  };
  const Pt points[] = {{0.1, 0.9}, {0.3, 0.9}, {0.5, 0.9}, {0.7, 0.9},  {0.85, 0.9},
                       {0.2, 1.2}, {0.5, 1.2}, {0.9, 1.2}, {0.4, 0.6}, {0.95, 1.5}};
  bool ok = true;
  std::string detail;
  std::vector<CheckResult> checks;
  for (const Pt& pt : points) {
    const ModelParams p{pt.ratio, 1.0};
    const double f_expect = std::sqrt(pt.ratio * pt.ratio - pt.m * pt.m) / (2.0 * kPi);
    const double t_end = 220.0 / f_expect;  // > 200 cycles
    const std::size_t samples = 8192;
    const auto rec = integrate_single(p, Vector3d(0, 0, pt.m), 0.0, t_end, samples);
    const auto freqs = dominant_frequencies(rec.mz_matrix(), rec.dt());
    const double bin = 1.0 / (rec.dt() * static_cast<double>(samples));
    const double err = std::abs(freqs[0].f_peak - f_expect);
    if (err > bin) {
      ok = false;
      detail += "(" + std::to_string(pt.m) + "," + std::to_string(pt.ratio) + ") ";
    }
  }
  checks.push_back({"FFT peak matches kappa*sqrt(ratio^2-m^2)/2pi within one bin, 10 points",
                    ok, detail});
  return checks;
}

// ---------------------------------------------------------- criterion 5 ----

std::vector<CheckResult> run_conservation() {
  bool ok = true;
  std::string detail;
  for (double m : {0.1, 0.5, 0.85, 0.95}) {
    const auto rec =
        integrate_single(ModelParams{0.9, 1.0}, Vector3d(0, 0, m), 0.0, 1000.0, 4096);
    // norm_drift records max |  |m(t)|^2 - |m(0)|^2 |
    if (rec.norm_drift(0) >= 1e-8) {
      ok = false;
      detail += "m=" + std::to_string(m) + " drift=" + std::to_string(rec.norm_drift(0)) + " ";
    }
  }
  return {{"|m(t)^2 - m(0)^2| < 1e-8 over t in [0, 1000]", ok, detail}};
}

// ------------------------------------------------------- criteria 6-12 -----

std::vector<CheckResult> run_phase_diagram_criterion() { return preset_phase_diagram(""); }

std::vector<CheckResult> run_spectral_scaling_criterion() {
  return preset_spectral_scaling("", /*quick=*/false);
}

std::vector<CheckResult> run_exact_vs_meanfield_criterion() {
  return preset_exact_vs_meanfield("");
}

std::vector<CheckResult> run_chimera_criterion() { return preset_chimera(""); }

std::vector<CheckResult> run_cluster_sync_criterion() { return preset_cluster_sync(""); }

std::vector<CheckResult> run_regime_exemplars_criterion() {
  return preset_regime_exemplars("");
}

std::vector<CheckResult> run_seeding_criterion() { return preset_seeding(""); }

// --------------------------------------------------------- criterion 13 ----

std::vector<CheckResult> run_synthetic_diagnostics() {
  std::vector<CheckResult> checks;
  {
    const double gamma = 0.5;
    auto rhs = [gamma](const VectorXd& x, VectorXd& dxdt, double) { dxdt = -gamma * x; };
    LyapunovOptions opts;
    opts.horizon = 120.0;
    opts.transient = 10.0;
    const auto res = max_lyapunov(rhs, VectorXd::Constant(3, 1.0), opts);
    checks.push_back({"lambda of xdot = -gamma x within 2%",
                      std::abs(res.lambda + gamma) <= 0.02 * gamma,
                      "lambda = " + std::to_string(res.lambda)});
  }
  {
    Rng rng(17);
    MatrixXd series(1024, 2);
    for (long i = 0; i < 1024; ++i) {
      series(i, 0) = rng.normal();
      series(i, 1) = rng.normal();
    }
    const auto base = pearson_matrix(series);
    MatrixXd pos = series, neg = series;
    pos.col(0) = 3.0 * series.col(0).array() + 1.0;
    neg.col(0) = -2.0 * series.col(0).array() + 0.5;
    const bool affine_ok =
        std::abs(pearson_matrix(pos).c(0, 1) - base.c(0, 1)) < 1e-12 &&
        std::abs(pearson_matrix(neg).c(0, 1) + base.c(0, 1)) < 1e-12;
    checks.push_back({"Pearson affine invariance and sign flip", affine_ok, ""});
  }
  {
    bool counting_ok = true;
    for (int n : {4, 10, 20}) {
      MatrixXd c = MatrixXd::Zero(n, n);
      c.topLeftCorner(n / 2, n / 2).setOnes();
      c.bottomRightCorner(n / 2, n / 2).setOnes();
      const double expect = (n / 2.0 - 1.0) / (n - 1.0);
      if (std::abs(mean_pearson(c) - expect) > 1e-12) counting_ok = false;
    }
    checks.push_back({"two-block mean Pearson counting formula, n in {4, 10, 20}",
                      counting_ok, ""});
  }
  return checks;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "algebra sum rule", run_sum_rule},
      {2, "sector oracle", run_sector_oracle},
      {3, "fixed-point and Jacobian closed forms", run_fixed_point_grid},
      {4, "frequency law", run_frequency_law},
      {5, "uncoupled norm conservation", run_conservation},
      {6, "phase diagram with integration cross-check", run_phase_diagram_criterion},
      {7, "spectral gap scaling", run_spectral_scaling_criterion},
      {8, "exact versus mean-field convergence", run_exact_vs_meanfield_criterion},
      {9, "chimera ensemble", run_chimera_criterion},
      {10, "cluster synchronization ensemble", run_cluster_sync_criterion},
      {11, "regime exemplars", run_regime_exemplars_criterion},
      {12, "seeding scan", run_seeding_criterion},
      {13, "synthetic diagnostics", run_synthetic_diagnostics},
  };

  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& criterion : criteria) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), criterion.id) == selected.end())
      continue;
    std::vector<CheckResult> checks;
    bool threw = false;
    std::string what;
    try {
      checks = criterion.run();
    } catch (const std::exception& e) {
      threw = true;
      what = e.what();
    }
    bool pass = !threw;
    for (const auto& c : checks) pass = pass && c.pass;
    std::printf("[%s] criterion %02d: %s\n", pass ? "PASS" : "FAIL", criterion.id,
                criterion.name.c_str());
    if (threw) std::printf("         exception: %s\n", what.c_str());
    for (const auto& c : checks)
      std::printf("         [%s] %s%s%s\n", c.pass ? "pass" : "FAIL", c.name.c_str(),
                  c.detail.empty() ? "" : " — ", c.detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }
  return failures;
}
