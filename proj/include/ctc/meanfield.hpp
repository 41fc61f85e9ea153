// meanfield.hpp — mean-field dynamics of single and coupled continuous time
// crystals: right-hand sides, adaptive trajectories on uniform grids,
// fixed-point analysis, phase diagram, and phase-portrait coordinates.
//
// Network state layout is structure-of-arrays: [mx_0..mx_{n-1}, my..., mz...].

#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "ctc/liouvillian.hpp"
#include "ctc/ode.hpp"
#include "ctc/rng.hpp"

namespace ctc {

// ---------------------------------------------------------------- RHS ------

namespace detail {

// Shared uncoupled kernel so the network RHS reduces bit-wise to the single
// CTC RHS when all couplings vanish.
inline void bloch_rhs(double mx, double my, double mz, double omega, double kappa,
                      double& dmx, double& dmy, double& dmz) {
  dmx = kappa * mx * mz;
  dmy = -omega * mz + kappa * my * mz;
  dmz = omega * my - kappa * (mx * mx + my * my);
}

}  // namespace detail

inline Vector3d rhs_single(const Vector3d& m, const ModelParams& params) {
  Vector3d dm;
  detail::bloch_rhs(m(0), m(1), m(2), params.omega, params.kappa, dm(0), dm(1), dm(2));
  return dm;
}

// Coupled network: per-CTC parameters, symmetric zero-diagonal coupling
// matrix Gamma, and an optional two-subgroup partition label per CTC.
struct NetworkConfig {
  std::vector<ModelParams> params;    // size n
  MatrixXd gamma;                     // n x n, symmetric, zero diagonal
  std::vector<int> partition;         // optional subgroup label per CTC

  int size() const { return static_cast<int>(params.size()); }

  bool has_coupling() const { return gamma.size() > 0 && gamma.cwiseAbs().maxCoeff() > 0.0; }

  void validate() const {
    const int n = size();
    if (n < 1) throw ValidationError("NetworkConfig: need at least one CTC");
    for (const auto& p : params) p.validate();
    if (gamma.rows() != n || gamma.cols() != n)
      throw ValidationError("NetworkConfig: coupling matrix must be n x n");
    if ((gamma - gamma.transpose()).cwiseAbs().maxCoeff() > 0.0)
      throw ValidationError("NetworkConfig: coupling matrix must be symmetric");
    if (gamma.diagonal().cwiseAbs().maxCoeff() > 0.0)
      throw ValidationError("NetworkConfig: coupling matrix must have zero diagonal");
    if (!partition.empty() && static_cast<int>(partition.size()) != n)
      throw ValidationError("NetworkConfig: partition labels must cover all CTCs");
  }
};

inline NetworkConfig uncoupled_config(const ModelParams& params, int n = 1) {
  NetworkConfig c;
  c.params.assign(static_cast<std::size_t>(n), params);
  c.gamma = MatrixXd::Zero(n, n);
  return c;
}

// All-to-all coupling of uniform strength.
inline MatrixXd uniform_coupling(int n, double gamma) {
  MatrixXd g = MatrixXd::Constant(n, n, gamma);
  g.diagonal().setZero();
  return g;
}

// Gamma * delta_{eps_i, eps_j}: couples only CTCs with equal partition label.
inline MatrixXd block_coupling(const std::vector<int>& partition, double gamma) {
  const int n = static_cast<int>(partition.size());
  MatrixXd g = MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && partition[i] == partition[j]) g(i, j) = gamma;
  return g;
}

// Coupled mean-field equations; the pairwise sums enter with weight 1/n.
inline void rhs_network(const VectorXd& state, VectorXd& deriv, const NetworkConfig& config) {
  const int n = config.size();
  deriv.resize(3 * n);
  const auto mx = state.segment(0, n);
  const auto my = state.segment(n, n);
  const auto mz = state.segment(2 * n, n);

  for (int a = 0; a < n; ++a)
    detail::bloch_rhs(mx(a), my(a), mz(a), config.params[static_cast<std::size_t>(a)].omega,
                      config.params[static_cast<std::size_t>(a)].kappa, deriv(a),
                      deriv(n + a), deriv(2 * n + a));

  if (config.has_coupling()) {
    const double inv_n = 1.0 / static_cast<double>(n);
    const VectorXd gx = config.gamma * mx;  // (Gamma m_x)_alpha, diagonal is zero
    const VectorXd gy = config.gamma * my;
    for (int a = 0; a < n; ++a) {
      deriv(a) += inv_n * mz(a) * gy(a);
      deriv(n + a) -= inv_n * mz(a) * gx(a);
      deriv(2 * n + a) += inv_n * (my(a) * gx(a) - mx(a) * gy(a));
    }
  }
}

inline VectorXd flat_state(const std::vector<Vector3d>& blochs) {
  const int n = static_cast<int>(blochs.size());
  VectorXd x(3 * n);
  for (int a = 0; a < n; ++a) {
    x(a) = blochs[static_cast<std::size_t>(a)](0);
    x(n + a) = blochs[static_cast<std::size_t>(a)](1);
    x(2 * n + a) = blochs[static_cast<std::size_t>(a)](2);
  }
  return x;
}

inline Vector3d bloch_of(const VectorXd& state, int n, int alpha) {
  return Vector3d(state(alpha), state(n + alpha), state(2 * n + alpha));
}

// ------------------------------------------------------- trajectories ------

struct TrajectoryRecord {
  int n_ctc = 0;
  VectorXd times;       // uniform grid
  MatrixXd states;      // one row per sample, 3n columns (SoA layout)
  VectorXd norm_drift;  // per CTC: max_t | |m(t)|^2 - |m(0)|^2 |
  double max_norm = 0.0;  // max_t,alpha |m_alpha(t)|

  double dt() const { return times.size() > 1 ? times(1) - times(0) : 0.0; }
  long samples() const { return times.size(); }

  auto mz_series(int alpha) const { return states.col(2 * n_ctc + alpha); }
  auto mx_series(int alpha) const { return states.col(alpha); }
  auto my_series(int alpha) const { return states.col(n_ctc + alpha); }

  // All m_z columns as one samples x n matrix.
  MatrixXd mz_matrix() const { return states.rightCols(n_ctc); }
};

inline TrajectoryRecord integrate_network(const NetworkConfig& config, const VectorXd& x0,
                                          double t0, double t1, std::size_t n_samples,
                                          const IntegrationOptions& opts = {}) {
  config.validate();
  const int n = config.size();
  if (x0.size() != 3 * n)
    throw ValidationError("integrate_network: state dimension does not match config");

  TrajectoryRecord rec;
  rec.n_ctc = n;
  const std::vector<double> grid = uniform_grid(t0, t1, n_samples);
  rec.times = Eigen::Map<const VectorXd>(grid.data(), static_cast<long>(grid.size()));
  rec.states.resize(static_cast<long>(n_samples), 3 * n);
  rec.norm_drift = VectorXd::Zero(n);

  VectorXd norm0(n);
  for (int a = 0; a < n; ++a) norm0(a) = bloch_of(x0, n, a).squaredNorm();

  auto rhs = [&config](const VectorXd& x, VectorXd& dxdt, double) {
    rhs_network(x, dxdt, config);
  };
  auto on_sample = [&](std::size_t i, double, const VectorXd& x) {
    rec.states.row(static_cast<long>(i)) = x.transpose();
    for (int a = 0; a < n; ++a) {
      const double norm2 = bloch_of(x, n, a).squaredNorm();
      rec.norm_drift(a) = std::max(rec.norm_drift(a), std::abs(norm2 - norm0(a)));
      rec.max_norm = std::max(rec.max_norm, std::sqrt(norm2));
    }
  };
  integrate_sampled(rhs, x0, grid, on_sample, opts);
  return rec;
}

inline TrajectoryRecord integrate_single(const ModelParams& params, const Vector3d& m0,
                                         double t0, double t1, std::size_t n_samples,
                                         const IntegrationOptions& opts = {}) {
  return integrate_network(uncoupled_config(params), flat_state({m0}), t0, t1, n_samples,
                           opts);
}

// ------------------------------------------------------- fixed points ------

enum class FixedPointClass { kCenter, kSaddle };

struct FixedPointReport {
  double m = 0.0;
  ModelParams params;
  std::array<Vector3d, 2> m1;  // (+, -) branches of the oscillatory fixed point
  std::array<Vector3d, 2> m2;  // (+, -) branches of the melted fixed point
  std::array<cxd, 3> lambda1;                  // {0, +r, -r}
  std::array<std::array<cxd, 3>, 2> lambda2;   // {0, r, r} and {0, -r, -r}
  bool m1_physical = false;
  bool m2_physical = false;
  bool degenerate = false;  // m == Omega/kappa: both fixed points coincide
  FixedPointClass classification = FixedPointClass::kCenter;  // of the physical point
  std::optional<double> omega_pred;  // oscillation frequency when m < Omega/kappa
};

// Closed-form fixed points of the single-CTC flow on the sphere of radius m,
// with Jacobian eigenvalues r = kappa*sqrt(m^2 - (Omega/kappa)^2) (imaginary
// in the oscillatory phase, real in the melted phase).
inline FixedPointReport fixed_points(double m, const ModelParams& params,
                                     double boundary_tol = 1e-12) {
  params.validate();
  if (!(m > 0.0) || m > 1.0) throw ValidationError("fixed_points: need 0 < m <= 1");

  FixedPointReport rep;
  rep.m = m;
  rep.params = params;
  const double ratio = params.ratio();
  const double disc = m * m - ratio * ratio;  // r^2 / kappa^2
  const cxd r = params.kappa * std::sqrt(cxd(disc, 0.0));

  rep.degenerate = std::abs(m - ratio) <= boundary_tol * std::max(1.0, ratio);
  rep.m1_physical = m <= ratio;
  rep.m2_physical = m >= ratio;

  if (params.omega > 0.0) {
    const double mk_over_omega = m * params.kappa / params.omega;
    const double arg = 1.0 - mk_over_omega * mk_over_omega;
    const double mx = m * std::sqrt(std::max(arg, 0.0));
    const double my = m * m * params.kappa / params.omega;
    rep.m1[0] = Vector3d(mx, my, 0.0);
    rep.m1[1] = Vector3d(-mx, my, 0.0);
  } else {
    rep.m1[0] = rep.m1[1] = Vector3d::Constant(std::numeric_limits<double>::quiet_NaN());
  }
  const double mz2 = std::sqrt(std::max(disc, 0.0));
  rep.m2[0] = Vector3d(0.0, ratio, mz2);
  rep.m2[1] = Vector3d(0.0, ratio, -mz2);

  rep.lambda1 = {cxd(0.0, 0.0), r, -r};
  rep.lambda2[0] = {cxd(0.0, 0.0), r, r};
  rep.lambda2[1] = {cxd(0.0, 0.0), -r, -r};

  if (!rep.degenerate)
    rep.classification = m < ratio ? FixedPointClass::kCenter : FixedPointClass::kSaddle;
  if (m < ratio) rep.omega_pred = params.kappa * std::sqrt(ratio * ratio - m * m);
  return rep;
}

// -------------------------------------------------- numerical Jacobian -----

// Central finite differences with step 1e-6 * max(1, |state|_inf).
inline MatrixXd numerical_jacobian(const std::function<VectorXd(const VectorXd&)>& rhs,
                                   const VectorXd& state, double h_scale = 1e-6) {
  const double h = h_scale * std::max(1.0, state.cwiseAbs().maxCoeff());
  const long n = state.size();
  MatrixXd jac(rhs(state).size(), n);
  VectorXd xp = state, xm = state;
  for (long j = 0; j < n; ++j) {
    xp(j) += h;
    xm(j) -= h;
    jac.col(j) = (rhs(xp) - rhs(xm)) / (2.0 * h);
    xp(j) = state(j);
    xm(j) = state(j);
  }
  return jac;
}

// ------------------------------------------------------- phase diagram -----

enum class Phase : int { kMelted = 0, kTimeCrystal = 1, kBoundary = -1 };

struct PhaseDiagram {
  std::vector<double> m_values;
  std::vector<double> ratio_values;  // Omega/kappa
  Eigen::MatrixXi labels;            // rows: m index, cols: ratio index
};

inline PhaseDiagram phase_diagram(const std::vector<double>& m_values,
                                  const std::vector<double>& ratio_values,
                                  double kappa = 1.0, double boundary_tol = 1e-9) {
  for (double m : m_values)
    if (!(m > 0.0) || m > 1.0) throw ValidationError("phase_diagram: m grid must lie in (0, 1]");
  for (double r : ratio_values)
    if (!(r > 0.0)) throw ValidationError("phase_diagram: Omega/kappa grid must be positive");

  PhaseDiagram pd{m_values, ratio_values, {}};
  pd.labels.resize(static_cast<long>(m_values.size()), static_cast<long>(ratio_values.size()));
  for (std::size_t i = 0; i < m_values.size(); ++i)
    for (std::size_t j = 0; j < ratio_values.size(); ++j) {
      const ModelParams p{ratio_values[j] * kappa, kappa};
      const FixedPointReport rep = fixed_points(m_values[i], p, boundary_tol);
      Phase label = Phase::kBoundary;
      if (!rep.degenerate)
        label = rep.classification == FixedPointClass::kCenter ? Phase::kTimeCrystal
                                                               : Phase::kMelted;
      pd.labels(static_cast<long>(i), static_cast<long>(j)) = static_cast<int>(label);
    }
  return pd;
}

struct PhaseCellCheck {
  std::size_t m_index = 0;
  std::size_t ratio_index = 0;
  int label = 0;
  double amplitude = 0.0;  // max - min of m_z over the late window
  bool consistent = false;
};

// Integrates (0,0,m) in a random subsample of non-boundary cells and checks
// that a visible late-time m_z oscillation appears exactly in cells labeled
// time-crystal.
inline std::vector<PhaseCellCheck> phase_diagram_cross_check(
    const PhaseDiagram& pd, std::size_t n_cells, std::uint64_t seed, double kappa = 1.0,
    double amplitude_floor = 1e-3, const IntegrationOptions& opts = {}) {
  Rng rng(seed);
  std::vector<PhaseCellCheck> checks;
  std::size_t guard = 0;
  while (checks.size() < n_cells && guard++ < 1000 * (n_cells + 1)) {
    const auto i = static_cast<std::size_t>(rng.uniform() * static_cast<double>(pd.m_values.size()));
    const auto j =
        static_cast<std::size_t>(rng.uniform() * static_cast<double>(pd.ratio_values.size()));
    const int label = pd.labels(static_cast<long>(i), static_cast<long>(j));
    if (label == static_cast<int>(Phase::kBoundary)) continue;
    // Stay clear of the boundary so the melted side has settled by the window.
    if (std::abs(pd.m_values[i] - pd.ratio_values[j]) < 0.04) continue;

    const ModelParams p{pd.ratio_values[j] * kappa, kappa};
    const TrajectoryRecord rec = integrate_single(p, Vector3d(0.0, 0.0, pd.m_values[i]),
                                                  0.0, 400.0, 2049, opts);
    const long half = rec.samples() / 2;
    const auto window = rec.mz_series(0).tail(rec.samples() - half);
    const double amplitude = window.maxCoeff() - window.minCoeff();
    const bool oscillating = amplitude > amplitude_floor;
    checks.push_back({i, j, label, amplitude,
                      oscillating == (label == static_cast<int>(Phase::kTimeCrystal))});
  }
  return checks;
}

// ------------------------------------------------------ phase portrait -----

struct PhasePortrait {
  VectorXd p;                   // principal-branch angle of (m_x, m_y)
  VectorXd q;                   // m_z
  std::vector<bool> undefined;  // samples with m_x = m_y = 0
};

// P = tan^-1(m_y/m_x) on the principal branch, with P = +-pi/2 as the
// m_x -> 0 limit; Q = m_z.
inline PhasePortrait phase_portrait(const TrajectoryRecord& rec, int alpha = 0) {
  if (alpha < 0 || alpha >= rec.n_ctc)
    throw ValidationError("phase_portrait: CTC index out of range");
  const long n = rec.samples();
  PhasePortrait pp;
  pp.p.resize(n);
  pp.q.resize(n);
  pp.undefined.assign(static_cast<std::size_t>(n), false);
  for (long i = 0; i < n; ++i) {
    const double mx = rec.mx_series(alpha)(i);
    const double my = rec.my_series(alpha)(i);
    if (mx == 0.0 && my == 0.0) {
      pp.undefined[static_cast<std::size_t>(i)] = true;
      pp.p(i) = std::numeric_limits<double>::quiet_NaN();
    } else if (mx == 0.0) {
      pp.p(i) = std::copysign(0.5 * kPi, my);
    } else {
      pp.p(i) = std::atan(my / mx);
    }
    pp.q(i) = rec.mz_series(alpha)(i);
  }
  return pp;
}

}  // namespace ctc
