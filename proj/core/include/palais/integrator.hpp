#ifndef PALAIS_INTEGRATOR_HPP
#define PALAIS_INTEGRATOR_HPP

#include <functional>
#include <string>
#include <vector>

#include "palais/types.hpp"

namespace palais {

/// State vector of a complex ODE (dimension 1..4 in this project).
using OdeState = std::vector<Complex>;

/// Right-hand side dy/dk = rhs(k, y); writes into dy (already sized).
using OdeRhs = std::function<void(double k, const OdeState& y, OdeState& dy)>;

enum class OdeStatus { completed, escaped, step_underflow };

const char* to_string(OdeStatus status);

struct OdeSample {
  double k;
  OdeState y;
  double local_error;  // accepted local error estimate of the step ending here
};

/// A lifted path: parameter samples, fiber values and error bookkeeping.
struct Trajectory {
  std::vector<OdeSample> samples;  // k strictly increasing from 0
  double error_estimate = 0.0;     // sum of accepted local error estimates
  OdeStatus status = OdeStatus::completed;

  const OdeState& final_state() const { return samples.back().y; }
  double final_k() const { return samples.back().k; }

  /// CSV with header k,re0,im0,...,local_error (stable across runs).
  std::string to_csv() const;
  std::string to_json_string() const;
};

struct IntegrateOptions {
  double tol = 1e-10;  // absolute and relative tolerance, in [1e-13, 1e-6]
  double k_begin = 0.0;
  double k_end = 1.0;
  double min_step = 1e-14;
  long max_steps = 2000000;
  /// Region predicate; the lift stops with status escaped once it fails.
  std::function<bool(double k, const OdeState& y)> admissible;
};

/// Embedded Dormand-Prince 5(4) pair with PI step-size control.  Local error
/// per step is kept at or below tol; the endpoint sample lands exactly on
/// k_end when the run completes.
Trajectory integrate(const OdeRhs& rhs, const OdeState& y0,
                     const IntegrateOptions& options);

/// Fixed-step run of the order-5 scheme (no error control); used for
/// convergence-order measurements.
OdeState integrate_fixed_step(const OdeRhs& rhs, const OdeState& y0,
                              double k_begin, double k_end, int n_steps);

}  // namespace palais

#endif  // PALAIS_INTEGRATOR_HPP
