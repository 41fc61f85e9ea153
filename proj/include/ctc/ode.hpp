// ode.hpp — adaptive Dormand-Prince 5(4) integration with dense-output
// sampling on caller-supplied grids, wrapped around boost::numeric::odeint.
//
// States are flat real vectors; complex systems map onto interleaved
// real/imaginary pairs at the call site (std::complex<double> is layout
// compatible with double[2]).

#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include <boost/numeric/odeint.hpp>
#include <boost/numeric/odeint/external/eigen/eigen.hpp>

#include "ctc/common.hpp"

namespace ctc {

struct IntegrationOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double init_dt = 1e-4;

  void validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !(init_dt > 0.0))
      throw ValidationError("IntegrationOptions: tolerances and init_dt must be > 0");
  }
};

namespace detail {

using BaseStepper =
    boost::numeric::odeint::runge_kutta_dopri5<VectorXd, double, VectorXd, double,
                                               boost::numeric::odeint::vector_space_algebra>;

inline auto make_dense_stepper(const IntegrationOptions& opts) {
  return boost::numeric::odeint::make_dense_output(opts.abs_tol, opts.rel_tol,
                                                   BaseStepper());
}

[[noreturn]] inline void rethrow_step_failure(double t, const std::exception& e) {
  throw NumericalError("adaptive step failed near t = " + std::to_string(t) +
                       " (" + e.what() + ")");
}

}  // namespace detail

// Advances `state` from t0 to t1 adaptively. On return `state` holds the
// solution at exactly t1 (via dense-output interpolation of the final step).
template <class Rhs>
void integrate_adaptive(Rhs&& rhs, VectorXd& state, double t0, double t1,
                        const IntegrationOptions& opts = {}) {
  opts.validate();
  if (t1 < t0) throw ValidationError("integrate_adaptive: t1 must be >= t0");
  if (t1 == t0) return;

  auto stepper = detail::make_dense_stepper(opts);
  stepper.initialize(state, t0, opts.init_dt);
  try {
    while (stepper.current_time() < t1) stepper.do_step(rhs);
  } catch (const NumericalError&) {
    throw;
  } catch (const std::exception& e) {
    detail::rethrow_step_failure(stepper.current_time(), e);
  }
  stepper.calc_state(t1, state);
}

// Adaptive integration sampled on an ascending time grid. Samples are
// interpolated from the dense output inside each accepted step, so the grid
// does not constrain step-size selection. `on_sample(i, t, x)` is invoked
// once per grid point, in order; the first grid point is the initial time.
template <class Rhs, class Observer>
void integrate_sampled(Rhs&& rhs, const VectorXd& x0, std::span<const double> times,
                       Observer&& on_sample, const IntegrationOptions& opts = {}) {
  opts.validate();
  if (times.empty()) return;
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw ValidationError("integrate_sampled: sample times must be strictly increasing");

  on_sample(std::size_t{0}, times[0], x0);
  if (times.size() == 1) return;

  auto stepper = detail::make_dense_stepper(opts);
  stepper.initialize(x0, times[0], opts.init_dt);

  VectorXd sample(x0.size());
  std::size_t next = 1;
  const double t_end = times[times.size() - 1];
  try {
    while (next < times.size()) {
      stepper.do_step(rhs);
      const double t_cur = stepper.current_time();
      while (next < times.size() && times[next] <= t_cur) {
        stepper.calc_state(times[next], sample);
        on_sample(next, times[next], sample);
        ++next;
      }
      if (t_cur >= t_end && next >= times.size()) break;
    }
  } catch (const NumericalError&) {
    throw;
  } catch (const std::exception& e) {
    detail::rethrow_step_failure(stepper.current_time(), e);
  }
}

// Fixed-step DOPRI5 (no error control). Used by convergence-order checks and
// anywhere a deterministic step sequence matters more than adaptivity.
template <class Rhs>
void integrate_fixed(Rhs&& rhs, VectorXd& state, double t0, double t1, double dt) {
  if (!(dt > 0.0)) throw ValidationError("integrate_fixed: dt must be > 0");
  detail::BaseStepper stepper;
  double t = t0;
  while (t < t1 - 0.5 * dt) {
    const double h = std::min(dt, t1 - t);
    stepper.do_step(rhs, state, t, h);
    t += h;
  }
}

// Uniform grid helper: n points spanning [t0, t1] inclusive.
inline std::vector<double> uniform_grid(double t0, double t1, std::size_t n) {
  if (n < 2) throw ValidationError("uniform_grid: need at least 2 points");
  if (!(t1 > t0)) throw ValidationError("uniform_grid: t1 must be > t0");
  std::vector<double> t(n);
  const double dt = (t1 - t0) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) t[i] = t0 + dt * static_cast<double>(i);
  t.back() = t1;
  return t;
}

}  // namespace ctc
