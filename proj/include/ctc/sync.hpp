// sync.hpp — synchronization diagnostics for CTC networks: Pearson
// correlation matrix and its mean, dominant oscillation frequencies,
// maximum Lyapunov exponent (Benettin two-trajectory method), and the
// rule-based regime classifier.

#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "ctc/meanfield.hpp"
#include "ctc/rng.hpp"

namespace ctc {

// Classifier and diagnostic thresholds. These are configuration, not
// constants: every report records the values used.
struct SyncThresholds {
  double eps_lambda = 1e-2;      // zero band for lambda_L (units of kappa)
  double edge = 0.9;             // |C_ab| threshold for a synchronization edge
  double complete_cbar = 0.95;   // mean Pearson above which sync is complete
  double unsync_cbar = 0.05;     // mean Pearson below which there is none
  double dead_var = 1e-12;       // m_z variance below which a CTC is dead
  double cluster_cover = 0.9;    // fraction of CTCs clusters must cover
  int min_cluster_size = 2;
};

// ------------------------------------------------------------ Pearson ------

struct PearsonResult {
  MatrixXd c;               // symmetric, unit diagonal
  Eigen::MatrixXi degenerate;  // 1 where either series is dead (off-diagonal)
  std::vector<bool> dead;   // per-CTC variance < dead_var
};

// Pearson correlation of the columns of `series` (rows are time samples).
// Dead series produce flagged off-diagonal entries, recorded as 0.
inline PearsonResult pearson_matrix(const MatrixXd& series, double dead_var = 1e-12) {
  const long n_samples = series.rows();
  const long n = series.cols();
  if (n_samples < 2) throw ValidationError("pearson_matrix: need at least two samples");

  VectorXd mean(n), var(n);
  for (long a = 0; a < n; ++a) {
    mean(a) = series.col(a).mean();
    var(a) = (series.col(a).array() - mean(a)).square().mean();
  }

  PearsonResult res;
  res.c = MatrixXd::Identity(n, n);
  res.degenerate = Eigen::MatrixXi::Zero(n, n);
  res.dead.resize(static_cast<std::size_t>(n));
  for (long a = 0; a < n; ++a) res.dead[static_cast<std::size_t>(a)] = var(a) < dead_var;

  for (long a = 0; a < n; ++a)
    for (long b = a + 1; b < n; ++b) {
      if (res.dead[static_cast<std::size_t>(a)] || res.dead[static_cast<std::size_t>(b)]) {
        res.degenerate(a, b) = res.degenerate(b, a) = 1;
        continue;  // entry stays 0
      }
      const double cov =
          ((series.col(a).array() - mean(a)) * (series.col(b).array() - mean(b))).mean();
      const double c = cov / std::sqrt(var(a) * var(b));
      res.c(a, b) = c;
      res.c(b, a) = c;
    }
  return res;
}

// Mean of the strictly upper triangle (degenerate entries count as 0).
inline double mean_pearson(const MatrixXd& c) {
  const long n = c.rows();
  if (n < 2) throw ValidationError("mean_pearson: need at least a 2x2 matrix");
  double sum = 0.0;
  for (long a = 0; a < n; ++a)
    for (long b = a + 1; b < n; ++b) sum += c(a, b);
  return sum / (0.5 * static_cast<double>(n) * static_cast<double>(n - 1));
}

// -------------------------------------------------------- frequencies ------

struct FrequencySpectrum {
  double f_peak = 0.0;  // dominant frequency (cycles per time unit)
  VectorXd freq;        // frequency axis up to Nyquist
  VectorXd magnitude;   // normalized to unit maximum
};

// Mean-subtracted, Hann-windowed FFT of each column; the peak excludes DC.
// Dead columns report f_peak = 0 and an all-zero spectrum.
inline std::vector<FrequencySpectrum> dominant_frequencies(const MatrixXd& series, double dt,
                                                           double dead_var = 1e-12) {
  const long n_samples = series.rows();
  const long n = series.cols();
  if (n_samples < 8) throw ValidationError("dominant_frequencies: series too short");
  if (!(dt > 0.0)) throw ValidationError("dominant_frequencies: dt must be > 0");

  VectorXd hann(n_samples);
  for (long i = 0; i < n_samples; ++i)
    hann(i) = 0.5 * (1.0 - std::cos(2.0 * kPi * static_cast<double>(i) /
                                    static_cast<double>(n_samples - 1)));

  const long n_bins = n_samples / 2 + 1;
  VectorXd freq_axis(n_bins);
  for (long k = 0; k < n_bins; ++k)
    freq_axis(k) = static_cast<double>(k) / (static_cast<double>(n_samples) * dt);

  Eigen::FFT<double> fft;
  std::vector<FrequencySpectrum> out(static_cast<std::size_t>(n));
  std::vector<double> buf(static_cast<std::size_t>(n_samples));
  std::vector<std::complex<double>> spec;

  for (long a = 0; a < n; ++a) {
    FrequencySpectrum& fs = out[static_cast<std::size_t>(a)];
    fs.freq = freq_axis;
    const double mean = series.col(a).mean();
    const double var = (series.col(a).array() - mean).square().mean();
    if (var < dead_var) {
      fs.magnitude = VectorXd::Zero(n_bins);
      continue;
    }
    for (long i = 0; i < n_samples; ++i)
      buf[static_cast<std::size_t>(i)] = (series(i, a) - mean) * hann(i);
    fft.fwd(spec, buf);
    fs.magnitude.resize(n_bins);
    for (long k = 0; k < n_bins; ++k) fs.magnitude(k) = std::abs(spec[static_cast<std::size_t>(k)]);
    long peak = 1;
    for (long k = 2; k < n_bins; ++k)
      if (fs.magnitude(k) > fs.magnitude(peak)) peak = k;
    fs.f_peak = freq_axis(peak);
    const double top = fs.magnitude.maxCoeff();
    if (top > 0.0) fs.magnitude /= top;
  }
  return out;
}

// ----------------------------------------------------------- Lyapunov ------

struct LyapunovOptions {
  double horizon = 1200.0;     // total integration time
  double transient = 200.0;    // discarded before accumulating
  double renorm_dt = 1.0;      // companion renormalization interval
  double d0 = 1e-8;            // companion offset
  double physical_bound = std::numeric_limits<double>::infinity();
  std::uint64_t seed = 0x9e3779b9ULL;  // offset-direction seed
  IntegrationOptions ode;
};

struct LyapunovResult {
  double lambda = 0.0;
  VectorXd running;  // estimate after each renormalization past the transient
  bool plateaued = false;
};

// Optional constraint on the companion offset. Called with the reference
// state; mutates the offset in place (e.g. projecting out directions that a
// conservation law makes exactly neutral).
using OffsetProjector = std::function<void(const VectorXd& x, VectorXd& offset)>;

// Projects the per-CTC radial components out of a network offset. The
// coupled mean-field flow conserves every |m_alpha|, so radial perturbations
// neither grow nor decay; leaving them in pins the two-trajectory estimate at
// zero and masks contraction onto death fixed points.
inline OffsetProjector network_tangent_projector(int n_ctc) {
  return [n_ctc](const VectorXd& x, VectorXd& offset) {
    for (int a = 0; a < n_ctc; ++a) {
      Vector3d m(x(a), x(n_ctc + a), x(2 * n_ctc + a));
      const double norm2 = m.squaredNorm();
      if (norm2 <= 0.0) continue;
      Vector3d u(offset(a), offset(n_ctc + a), offset(2 * n_ctc + a));
      u -= (u.dot(m) / norm2) * m;
      offset(a) = u(0);
      offset(n_ctc + a) = u(1);
      offset(2 * n_ctc + a) = u(2);
    }
  };
}

// Benettin two-trajectory estimate of the maximum Lyapunov exponent.
template <class Rhs>
LyapunovResult max_lyapunov(Rhs&& rhs, const VectorXd& x0, const LyapunovOptions& opts = {},
                            const OffsetProjector& project = {}) {
  if (!(opts.horizon > opts.transient))
    throw ValidationError("max_lyapunov: horizon must exceed the transient");
  if (!(opts.d0 > 0.0) || !(opts.renorm_dt > 0.0))
    throw ValidationError("max_lyapunov: d0 and renorm_dt must be > 0");

  Rng rng(opts.seed);
  VectorXd offset(x0.size());
  for (long i = 0; i < offset.size(); ++i) offset(i) = rng.normal();
  if (project) project(x0, offset);
  if (!(offset.norm() > 0.0))
    throw NumericalError("max_lyapunov: offset vanished under the constraint projector");
  offset.normalize();

  VectorXd x = x0;
  VectorXd xc = x0 + opts.d0 * offset;

  double t = 0.0;
  double log_sum = 0.0;
  double accumulated = 0.0;
  std::vector<double> running;

  while (t < opts.horizon - 0.5 * opts.renorm_dt) {
    const double t_next = t + opts.renorm_dt;
    integrate_adaptive(rhs, x, t, t_next, opts.ode);
    integrate_adaptive(rhs, xc, t, t_next, opts.ode);
    t = t_next;

    const double d = (xc - x).norm();
    if (!(d > 0.0) || !std::isfinite(d))
      throw NumericalError("max_lyapunov: companion separation underflow at t = " +
                           std::to_string(t));
    if (xc.cwiseAbs().maxCoeff() > opts.physical_bound)
      throw NumericalError("max_lyapunov: companion escaped the physical region at t = " +
                           std::to_string(t));

    if (t > opts.transient) {
      log_sum += std::log(d / opts.d0);
      accumulated += opts.renorm_dt;
      running.push_back(log_sum / accumulated);
    }
    offset = xc - x;
    if (project) {
      project(x, offset);
      const double tangent_norm = offset.norm();
      if (!(tangent_norm > 0.0))
        throw NumericalError("max_lyapunov: offset vanished under the constraint projector");
      offset *= d / tangent_norm;  // keep the measured separation magnitude
    }
    xc = x + (opts.d0 / d) * offset;
  }

  LyapunovResult res;
  if (accumulated <= 0.0) throw NumericalError("max_lyapunov: no post-transient interval");
  res.lambda = log_sum / accumulated;
  res.running = Eigen::Map<const VectorXd>(running.data(), static_cast<long>(running.size()));
  if (running.size() >= 4) {
    const double earlier = running[running.size() * 3 / 4];
    res.plateaued = std::abs(res.lambda - earlier) <= std::max(5e-3, 0.05 * std::abs(res.lambda));
  }
  return res;
}

// ---------------------------------------------------------- classifier -----

enum class Regime : int {
  kUnsynchronized = 0,
  kChimera = 1,
  kClusterSync = 2,
  kChimeraPartialDeath = 3,
  kOscillationDeath = 4,
  kChaotic = 5,
  kCompleteSync = 6,
};

inline const char* regime_name(Regime r) {
  switch (r) {
    case Regime::kUnsynchronized: return "unsynchronized";
    case Regime::kChimera: return "chimera";
    case Regime::kClusterSync: return "cluster-sync";
    case Regime::kChimeraPartialDeath: return "chimera+partial-oscillation-death";
    case Regime::kOscillationDeath: return "oscillation-death";
    case Regime::kChaotic: return "chaotic";
    case Regime::kCompleteSync: return "complete-sync";
  }
  return "unknown";
}

inline Regime regime_from_name(const std::string& name) {
  for (int i = 0; i <= static_cast<int>(Regime::kCompleteSync); ++i)
    if (name == regime_name(static_cast<Regime>(i))) return static_cast<Regime>(i);
  throw ValidationError("unknown regime label: " + name);
}

// Connected components of the graph with edges |C_ab| >= edge; only
// components of at least min_cluster_size count as clusters.
inline std::vector<std::vector<int>> sync_clusters(const MatrixXd& c, double edge,
                                                   int min_cluster_size = 2) {
  const int n = static_cast<int>(c.rows());
  std::vector<int> component(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> clusters;
  for (int start = 0; start < n; ++start) {
    if (component[static_cast<std::size_t>(start)] >= 0) continue;
    std::vector<int> stack{start};
    std::vector<int> members;
    component[static_cast<std::size_t>(start)] = start;
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      members.push_back(a);
      for (int b = 0; b < n; ++b)
        if (component[static_cast<std::size_t>(b)] < 0 && std::abs(c(a, b)) >= edge) {
          component[static_cast<std::size_t>(b)] = start;
          stack.push_back(b);
        }
    }
    if (static_cast<int>(members.size()) >= min_cluster_size) {
      std::sort(members.begin(), members.end());
      clusters.push_back(std::move(members));
    }
  }
  return clusters;
}

// Rule-based regime label. Pure function of its inputs.
inline Regime classify_regime(const MatrixXd& c, double cbar, const std::vector<bool>& dead,
                              double lambda, const SyncThresholds& th = {}) {
  if (c.rows() != c.cols() || static_cast<std::size_t>(c.rows()) != dead.size())
    throw ValidationError("classify_regime: inconsistent inputs");
  const int n = static_cast<int>(c.rows());

  if (lambda > th.eps_lambda) return Regime::kChaotic;
  if (lambda < -th.eps_lambda) {
    const bool all_dead = std::all_of(dead.begin(), dead.end(), [](bool d) { return d; });
    return all_dead ? Regime::kOscillationDeath : Regime::kChimeraPartialDeath;
  }
  if (cbar >= th.complete_cbar) return Regime::kCompleteSync;
  if (cbar <= th.unsync_cbar) return Regime::kUnsynchronized;

  const auto clusters = sync_clusters(c, th.edge, th.min_cluster_size);
  std::size_t covered = 0;
  for (const auto& cl : clusters) covered += cl.size();
  if (clusters.size() >= 2 &&
      static_cast<double>(covered) >= th.cluster_cover * static_cast<double>(n))
    return Regime::kClusterSync;
  return Regime::kChimera;
}

// ------------------------------------------------------------- report ------

struct SyncReport {
  MatrixXd pearson;
  Eigen::MatrixXi degenerate;
  std::vector<bool> dead;
  double cbar = 0.0;
  std::vector<FrequencySpectrum> freqs;
  double lambda = 0.0;
  VectorXd lambda_running;
  Regime regime = Regime::kUnsynchronized;
  std::vector<std::vector<int>> clusters;
  double window_t0 = 0.0;
  double window_t1 = 0.0;
  SyncThresholds thresholds;
};

// Extracts the window [t0, t1] of m_z samples from a uniform-grid trajectory.
inline MatrixXd mz_window(const TrajectoryRecord& rec, double t0, double t1) {
  if (rec.samples() < 2) throw ValidationError("mz_window: trajectory too short");
  const double start = rec.times(0);
  const double dt = rec.dt();
  if (t0 < start - 1e-9 || t1 > rec.times(rec.samples() - 1) + 1e-9 || !(t1 > t0))
    throw ValidationError("mz_window: window exceeds trajectory data");
  const long i0 = static_cast<long>(std::ceil((t0 - start) / dt - 1e-9));
  const long i1 = static_cast<long>(std::floor((t1 - start) / dt + 1e-9));
  if (i1 - i0 + 1 < 2) throw ValidationError("mz_window: window contains too few samples");
  return rec.states.block(i0, 2 * rec.n_ctc, i1 - i0 + 1, rec.n_ctc);
}

// Assembles the full report from a trajectory window plus a Lyapunov result
// computed by the caller (it needs the dynamical system, not just samples).
inline SyncReport build_sync_report(const TrajectoryRecord& rec, double t0, double t1,
                                    const LyapunovResult& lyap,
                                    const SyncThresholds& th = {}) {
  const MatrixXd window = mz_window(rec, t0, t1);
  SyncReport report;
  report.thresholds = th;
  report.window_t0 = t0;
  report.window_t1 = t1;
  PearsonResult pearson = pearson_matrix(window, th.dead_var);
  report.pearson = std::move(pearson.c);
  report.degenerate = std::move(pearson.degenerate);
  report.dead = std::move(pearson.dead);
  report.cbar = mean_pearson(report.pearson);
  report.freqs = dominant_frequencies(window, rec.dt(), th.dead_var);
  report.lambda = lyap.lambda;
  report.lambda_running = lyap.running;
  report.clusters = sync_clusters(report.pearson, th.edge, th.min_cluster_size);
  report.regime = classify_regime(report.pearson, report.cbar, report.dead, report.lambda, th);
  return report;
}

}  // namespace ctc
