// liouvillian.hpp — vectorized Liouvillian blocks of the driven-dissipative
// collective spin model, their eigenspectra, and exact time evolution.
//
// The master equation per block is
//   drho/dt = -i[Omega*Sx, rho] + (kappa/S)(Sm rho Sp - 1/2 {Sp Sm, rho}),
// with S = N/2 fixed by the particle number, while the operators act in the
// (2J+1)-dimensional spin-J representation. Vectorization is column-stacking
// throughout: vec(A rho B) = (B^T kron A) vec(rho).

#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/Sparse>
#include <unsupported/Eigen/KroneckerProduct>

#include "ctc/ode.hpp"
#include "ctc/parallel.hpp"
#include "ctc/spin.hpp"

namespace ctc {

struct ModelParams {
  double omega = 0.0;  // drive amplitude
  double kappa = 1.0;  // collective dissipation rate

  void validate() const {
    if (!(kappa > 0.0)) throw ValidationError("ModelParams: kappa must be > 0");
    if (omega < 0.0) throw ValidationError("ModelParams: omega must be >= 0");
  }
  double ratio() const { return omega / kappa; }  // Omega / kappa
};

// Eigenvalues with |lambda| below this are treated as stationary.
inline constexpr double kStationaryTol = 1e-9;

// Eigenvalues with |Im| below this count as real relaxation modes. Dense
// eigensolvers split degenerate real clusters into spurious conjugate pairs
// with |Im| up to ~1e-7 (defective-matrix perturbation), well below any
// genuine oscillation frequency of the model.
inline constexpr double kOscillatoryImTol = 1e-6;

struct LiouvillianBlock {
  SpinSector sector;
  ModelParams params;
  MatrixXcd superop;  // dense, (2J+1)^2 x (2J+1)^2, column-stacked

  int dim() const { return sector.dim(); }
  int superop_dim() const { return sector.dim() * sector.dim(); }

  // Sparse assembly; entry-identical to the dense matrix (exact zeros pruned).
  Eigen::SparseMatrix<cxd> sparse() const {
    return superop.sparseView(0.0, 0.0);
  }
};

// Builds the column-stacked superoperator for one spin-J block.
// The dissipator prefactor is kappa/S with S = N/2 taken from the sector's
// particle count, not from J.
inline LiouvillianBlock build_block(const SpinSector& sector, const ModelParams& params,
                                    int max_superop_dim = 4096) {
  params.validate();
  if (sector.n_particles < 1 || sector.two_j < 0 || sector.two_j > sector.n_particles)
    throw ValidationError("build_block: inconsistent sector " + sector.label());
  const int d = sector.dim();
  if (static_cast<long>(d) * d > max_superop_dim)
    throw ValidationError("build_block: superoperator dimension " +
                          std::to_string(static_cast<long>(d) * d) +
                          " exceeds cap " + std::to_string(max_superop_dim) +
                          " for " + sector.label());

  const SpinOperatorSet ops = build_operators(sector.two_j);
  const MatrixXcd id = MatrixXcd::Identity(d, d);
  const MatrixXcd h = params.omega * ops.sx;
  const MatrixXcd sp_sm = ops.sp * ops.sm;
  const double rate = params.kappa / (0.5 * sector.n_particles);

  LiouvillianBlock block{sector, params, {}};
  block.superop =
      cxd(0.0, -1.0) * (Eigen::kroneckerProduct(id, h).eval() -
                        Eigen::kroneckerProduct(h.transpose(), id).eval()) +
      rate * (Eigen::kroneckerProduct(ops.sp.transpose(), ops.sm).eval() -
              0.5 * Eigen::kroneckerProduct(id, sp_sm).eval() -
              0.5 * Eigen::kroneckerProduct(sp_sm.transpose(), id).eval());
  return block;
}

// Max-norm residual of the trace-preservation identity vec(I)^T L = 0.
inline double trace_covector_residual(const LiouvillianBlock& block) {
  const int d = block.dim();
  MatrixXcd id = MatrixXcd::Identity(d, d);
  Eigen::Map<const VectorXcd> vec_id(id.data(), d * d);
  return (vec_id.transpose() * block.superop).cwiseAbs().maxCoeff();
}

struct SpectralResult {
  SpinSector sector;
  ModelParams params;
  VectorXcd eigenvalues;            // all of them, sorted by descending Re
  std::optional<cxd> lambda1;       // dominant nonzero eigenvalue, if any
  std::optional<cxd> lambda1_any;   // max-Re nonzero eigenvalue, oscillatory or not
  int n_stationary = 0;             // count of |lambda| < kStationaryTol
  double max_re = 0.0;              // dissipativity diagnostic

  double gap() const { return lambda1 ? -lambda1->real() : 0.0; }
};

namespace detail {

// Dominant-eigenvalue ordering: larger Re wins; within an Re tie, larger
// |Im|; within that, positive Im. Tie tolerance keeps conjugate pairs and
// round-off from making the selection run-to-run unstable.
inline bool dominates(const cxd& a, const cxd& b) {
  const double re_tol = 1e-12 * std::max(1.0, std::max(std::abs(a.real()), std::abs(b.real())));
  if (a.real() > b.real() + re_tol) return true;
  if (b.real() > a.real() + re_tol) return false;
  const double abs_im_a = std::abs(a.imag());
  const double abs_im_b = std::abs(b.imag());
  const double im_tol = 1e-12 * std::max(1.0, std::max(abs_im_a, abs_im_b));
  if (abs_im_a > abs_im_b + im_tol) return true;
  if (abs_im_b > abs_im_a + im_tol) return false;
  return a.imag() > b.imag();
}

// Unitary change of basis from coordinates over the orthonormal Hermitian
// matrix basis {E_ii, (E_ij+E_ji)/sqrt2, i(E_ij-E_ji)/sqrt2} to column-stacked
// coordinates. Hermiticity preservation makes the Liouvillian real in the
// Hermitian basis, which roughly halves the eigensolver cost.
inline Eigen::SparseMatrix<cxd> hermitian_basis_map(int d) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<Eigen::Triplet<cxd>> triplets;
  triplets.reserve(static_cast<std::size_t>(2 * d) * d);
  auto vec_idx = [d](int r, int c) { return c * d + r; };
  int k = 0;
  for (int i = 0; i < d; ++i) triplets.emplace_back(vec_idx(i, i), k++, cxd(1.0, 0.0));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      triplets.emplace_back(vec_idx(i, j), k, cxd(inv_sqrt2, 0.0));
      triplets.emplace_back(vec_idx(j, i), k, cxd(inv_sqrt2, 0.0));
      ++k;
      triplets.emplace_back(vec_idx(i, j), k, cxd(0.0, inv_sqrt2));
      triplets.emplace_back(vec_idx(j, i), k, cxd(0.0, -inv_sqrt2));
      ++k;
    }
  Eigen::SparseMatrix<cxd> u(d * d, d * d);
  u.setFromTriplets(triplets.begin(), triplets.end());
  return u;
}

// Eigenvalues of a Hermiticity-preserving superoperator (dense, column
// stacked, acting on a d x d operator space). Conjugates into the Hermitian
// matrix basis where such generators are real and runs the real eigensolver;
// falls back to complex Schur if the matrix is not real there.
inline VectorXcd hermiticity_preserving_eigenvalues(const MatrixXcd& superop,
                                                    bool use_complex_solver = false) {
  const long n = superop.rows();
  const long d = static_cast<long>(std::llround(std::sqrt(static_cast<double>(n))));
  if (superop.cols() != n || d * d != n)
    throw ValidationError("hermiticity_preserving_eigenvalues: not a superoperator shape");

  if (!use_complex_solver) {
    const Eigen::SparseMatrix<cxd> u = detail::hermitian_basis_map(static_cast<int>(d));
    const MatrixXcd rotated = u.adjoint() * MatrixXcd(superop * u);
    const double scale = std::max(1.0, superop.cwiseAbs().maxCoeff());
    if (rotated.imag().cwiseAbs().maxCoeff() <= 1e-10 * scale) {
      Eigen::EigenSolver<MatrixXd> solver(rotated.real(), false);
      if (solver.info() != Eigen::Success)
        throw NumericalError("hermiticity_preserving_eigenvalues: real eigensolver failed");
      return solver.eigenvalues();
    }
  }
  Eigen::ComplexEigenSolver<MatrixXcd> solver(superop, false);
  if (solver.info() != Eigen::Success)
    throw NumericalError("hermiticity_preserving_eigenvalues: complex eigensolver failed");
  return solver.eigenvalues();
}

}  // namespace detail

using detail::hermiticity_preserving_eigenvalues;

// Full eigenspectrum of one block. `use_complex_solver` forces the direct
// complex Schur path (the cross-check route); by default the block is
// conjugated into the Hermitian basis and solved as a real matrix.
inline SpectralResult spectrum(const LiouvillianBlock& block, int max_superop_dim = 4096,
                               bool use_complex_solver = false) {
  const int n = block.superop_dim();
  if (n > max_superop_dim)
    throw ValidationError("spectrum: block " + block.sector.label() +
                          " exceeds dense-eigensolver cap " + std::to_string(max_superop_dim));

  SpectralResult result{block.sector, block.params, VectorXcd(), std::nullopt,
                        std::nullopt, 0, 0.0};

  VectorXcd evals;
  try {
    evals = detail::hermiticity_preserving_eigenvalues(block.superop, use_complex_solver);
  } catch (const NumericalError& e) {
    throw NumericalError(std::string(e.what()) + " on " + block.sector.label());
  }

  std::vector<cxd> sorted(evals.data(), evals.data() + evals.size());
  std::sort(sorted.begin(), sorted.end(), [](const cxd& a, const cxd& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  result.eigenvalues = Eigen::Map<const VectorXcd>(sorted.data(), static_cast<long>(sorted.size()));

  // lambda1 prefers oscillatory modes: among nonzero eigenvalues with
  // Im != 0, the one with maximal Re (ties by larger |Im|, then positive Im).
  // Strictly real relaxation modes from low-J sectors can sit closer to zero
  // than the oscillatory branch; picking them would report a "dominant"
  // eigenvalue with zero frequency, which is not the mode whose gap closing
  // defines the time-crystal signal. When the block has no oscillatory
  // eigenvalue at all (e.g. Omega = 0), lambda1 falls back to lambda1_any.
  result.max_re = sorted.front().real();
  for (const cxd& ev : sorted) {
    if (std::abs(ev) < kStationaryTol) {
      ++result.n_stationary;
      continue;
    }
    if (!result.lambda1_any || detail::dominates(ev, *result.lambda1_any))
      result.lambda1_any = ev;
    if (std::abs(ev.imag()) > kOscillatoryImTol &&
        (!result.lambda1 || detail::dominates(ev, *result.lambda1)))
      result.lambda1 = ev;
  }
  if (!result.lambda1) result.lambda1 = result.lambda1_any;
  return result;
}

// Spectra of every spin-J block of N particles plus the globally dominant
// nonzero eigenvalue and the sector it lives in.
struct SpaceSpectrum {
  std::vector<SpectralResult> per_sector;  // descending J
  std::size_t dominant_index = 0;

  const SpectralResult& dominant() const { return per_sector[dominant_index]; }
};

inline SpaceSpectrum dominant_over_space(int n_particles, const ModelParams& params,
                                         bool symmetric_only = false,
                                         int max_superop_dim = 4096, unsigned workers = 0) {
  params.validate();
  std::vector<SpinSector> sectors = enumerate_sectors(n_particles);
  if (symmetric_only) sectors.resize(1);

  SpaceSpectrum space;
  space.per_sector.resize(sectors.size());
  std::vector<std::string> errors(sectors.size());
  parallel_for(sectors.size(), [&](std::size_t i) {
    try {
      space.per_sector[i] = spectrum(build_block(sectors[i], params, max_superop_dim),
                                     max_superop_dim);
    } catch (const std::exception& e) {
      errors[i] = std::string(e.what());
    }
  }, workers);
  for (std::size_t i = 0; i < sectors.size(); ++i)
    if (!errors[i].empty())
      throw NumericalError("dominant_over_space: sector " + sectors[i].label() +
                           ": " + errors[i]);

  bool found = false;
  for (std::size_t i = 0; i < space.per_sector.size(); ++i) {
    const auto& lam = space.per_sector[i].lambda1;
    if (!lam) continue;
    if (!found || detail::dominates(*lam, *space.per_sector[space.dominant_index].lambda1)) {
      space.dominant_index = i;
      found = true;
    }
  }
  if (!found)
    throw NumericalError("dominant_over_space: no nonzero eigenvalue in any sector (N=" +
                         std::to_string(n_particles) + ")");
  return space;
}

// |J,J><J,J| in the descending-m basis (the first basis vector).
inline MatrixXcd highest_weight_density(int dim) {
  MatrixXcd rho = MatrixXcd::Zero(dim, dim);
  rho(0, 0) = 1.0;
  return rho;
}

struct ExactTrajectory {
  VectorXd times;
  VectorXd mx, my, mz;          // <S_alpha>/S with S = N/2
  double max_trace_drift = 0.0;
  double max_herm_drift = 0.0;
  std::vector<MatrixXcd> states;  // populated only when requested
};

struct EvolveOptions {
  IntegrationOptions ode;
  double state_tol = 1e-10;   // admissibility tolerance on rho0
  double trace_tol = 1e-8;    // hard bound on |tr rho(t) - 1|
  bool keep_states = false;
};

// Integrates dvec(rho)/dt = L vec(rho) on the given time grid and records the
// rescaled spin expectations m_alpha(t) = <S_alpha>/S, S = N/2.
inline ExactTrajectory evolve_exact(const LiouvillianBlock& block, const MatrixXcd& rho0,
                                    std::span<const double> times,
                                    const EvolveOptions& opts = {}) {
  const int d = block.dim();
  if (rho0.rows() != d || rho0.cols() != d)
    throw ValidationError("evolve_exact: rho0 dimension mismatch for " + block.sector.label());
  if ((rho0 - rho0.adjoint()).cwiseAbs().maxCoeff() > opts.state_tol)
    throw ValidationError("evolve_exact: rho0 is not Hermitian");
  if (std::abs(rho0.trace() - cxd(1.0, 0.0)) > opts.state_tol)
    throw ValidationError("evolve_exact: rho0 trace must be 1");
  {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(0.5 * (rho0 + rho0.adjoint()));
    if (es.eigenvalues().minCoeff() < -opts.state_tol)
      throw ValidationError("evolve_exact: rho0 is not positive semidefinite");
  }
  if (times.size() < 1) throw ValidationError("evolve_exact: empty time grid");

  const SpinOperatorSet ops = build_operators(block.sector.two_j);
  const double inv_s = 1.0 / (0.5 * block.sector.n_particles);
  const std::size_t n_t = times.size();

  ExactTrajectory traj;
  traj.times = Eigen::Map<const VectorXd>(times.data(), static_cast<long>(n_t));
  traj.mx.resize(static_cast<long>(n_t));
  traj.my.resize(static_cast<long>(n_t));
  traj.mz.resize(static_cast<long>(n_t));
  if (opts.keep_states) traj.states.reserve(n_t);

  // Complex d^2 vector as interleaved real pairs.
  VectorXd x0(2 * d * d);
  Eigen::Map<VectorXcd>(reinterpret_cast<cxd*>(x0.data()), d * d) =
      Eigen::Map<const VectorXcd>(rho0.data(), d * d);

  const MatrixXcd& lop = block.superop;
  auto rhs = [&lop, d](const VectorXd& x, VectorXd& dxdt, double) {
    dxdt.resize(x.size());
    Eigen::Map<const VectorXcd> v(reinterpret_cast<const cxd*>(x.data()), d * d);
    Eigen::Map<VectorXcd> w(reinterpret_cast<cxd*>(dxdt.data()), d * d);
    w.noalias() = lop * v;
  };

  auto on_sample = [&](std::size_t i, double, const VectorXd& x) {
    Eigen::Map<const MatrixXcd> rho(reinterpret_cast<const cxd*>(x.data()), d, d);
    traj.mx(static_cast<long>(i)) = (rho * ops.sx).trace().real() * inv_s;
    traj.my(static_cast<long>(i)) = (rho * ops.sy).trace().real() * inv_s;
    traj.mz(static_cast<long>(i)) = (rho * ops.sz).trace().real() * inv_s;
    traj.max_trace_drift =
        std::max(traj.max_trace_drift, std::abs(rho.trace() - cxd(1.0, 0.0)));
    traj.max_herm_drift =
        std::max(traj.max_herm_drift, (rho - rho.adjoint()).cwiseAbs().maxCoeff());
    if (opts.keep_states) traj.states.push_back(rho);
  };

  integrate_sampled(rhs, x0, times, on_sample, opts.ode);

  if (traj.max_trace_drift > opts.trace_tol)
    throw NumericalError("evolve_exact: trace drift " + std::to_string(traj.max_trace_drift) +
                         " exceeds tolerance on " + block.sector.label());
  return traj;
}

}  // namespace ctc
