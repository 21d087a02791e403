#include "palais/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace palais {

namespace {

// Dormand-Prince RK5(4)7M coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// b(5th) - b(4th), the embedded error weights (stage 2 weight is zero).
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

struct Stages {
  OdeState k1, k2, k3, k4, k5, k6, k7, ytmp, ynew;
  explicit Stages(std::size_t n)
      : k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), ynew(n) {}
};

// One DP5 step from (k, y) with step h; returns the scaled error estimate.
// On entry k1 must hold rhs(k, y) (FSAL).
double dp5_step(const OdeRhs& rhs, double k, const OdeState& y, double h,
                double tol, Stages& s) {
  const std::size_t n = y.size();
  for (std::size_t i = 0; i < n; ++i) s.ytmp[i] = y[i] + h * a21 * s.k1[i];
  rhs(k + c2 * h, s.ytmp, s.k2);
  for (std::size_t i = 0; i < n; ++i)
    s.ytmp[i] = y[i] + h * (a31 * s.k1[i] + a32 * s.k2[i]);
  rhs(k + c3 * h, s.ytmp, s.k3);
  for (std::size_t i = 0; i < n; ++i)
    s.ytmp[i] = y[i] + h * (a41 * s.k1[i] + a42 * s.k2[i] + a43 * s.k3[i]);
  rhs(k + c4 * h, s.ytmp, s.k4);
  for (std::size_t i = 0; i < n; ++i)
    s.ytmp[i] = y[i] + h * (a51 * s.k1[i] + a52 * s.k2[i] + a53 * s.k3[i] +
                            a54 * s.k4[i]);
  rhs(k + c5 * h, s.ytmp, s.k5);
  for (std::size_t i = 0; i < n; ++i)
    s.ytmp[i] = y[i] + h * (a61 * s.k1[i] + a62 * s.k2[i] + a63 * s.k3[i] +
                            a64 * s.k4[i] + a65 * s.k5[i]);
  rhs(k + h, s.ytmp, s.k6);
  for (std::size_t i = 0; i < n; ++i)
    s.ynew[i] = y[i] + h * (b1 * s.k1[i] + b3 * s.k3[i] + b4 * s.k4[i] +
                            b5 * s.k5[i] + b6 * s.k6[i]);
  rhs(k + h, s.ynew, s.k7);

  double err_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Complex diff = h * (e1 * s.k1[i] + e3 * s.k3[i] + e4 * s.k4[i] +
                              e5 * s.k5[i] + e6 * s.k6[i] + e7 * s.k7[i]);
    const double scale =
        tol + tol * std::max(std::abs(y[i]), std::abs(s.ynew[i]));
    const double r = std::abs(diff) / scale;
    err_sq += r * r;
  }
  return std::sqrt(err_sq / static_cast<double>(n));
}

}  // namespace

const char* to_string(OdeStatus status) {
  switch (status) {
    case OdeStatus::completed: return "completed";
    case OdeStatus::escaped: return "escaped";
    case OdeStatus::step_underflow: return "step_underflow";
  }
  return "unknown";
}

Trajectory integrate(const OdeRhs& rhs, const OdeState& y0,
                     const IntegrateOptions& options) {
  if (!(options.tol >= 1e-13 && options.tol <= 1e-6)) {
    throw std::invalid_argument("integrate: tol must lie in [1e-13, 1e-6]");
  }
  const double span = options.k_end - options.k_begin;
  if (span <= 0.0) throw std::invalid_argument("integrate: empty k range");

  Trajectory traj;
  traj.samples.push_back({options.k_begin, y0, 0.0});
  if (options.admissible && !options.admissible(options.k_begin, y0)) {
    traj.status = OdeStatus::escaped;
    return traj;
  }

  Stages s(y0.size());
  OdeState y = y0;
  double k = options.k_begin;
  double h = std::min(1e-2 * span, span);
  double err_prev = 1e-4;
  rhs(k, y, s.k1);

  for (long step = 0; step < options.max_steps; ++step) {
    if (k >= options.k_end - 1e-15 * std::abs(span)) {
      traj.status = OdeStatus::completed;
      // Snap the final sample onto k_end exactly.
      traj.samples.back().k = options.k_end;
      return traj;
    }
    h = std::min(h, options.k_end - k);
    const double err = dp5_step(rhs, k, y, h, options.tol, s);
    if (err <= 1.0) {
      k += h;
      y = s.ynew;
      std::swap(s.k1, s.k7);  // FSAL
      const double local = err * options.tol;
      traj.error_estimate += local;
      traj.samples.push_back({k, y, local});
      if (options.admissible && !options.admissible(k, y)) {
        traj.status = OdeStatus::escaped;
        return traj;
      }
      // PI controller (Hairer-style), safety 0.9.
      const double fac =
          0.9 * std::pow(std::max(err, 1e-10), -0.7 / 5.0) *
          std::pow(err_prev, 0.4 / 5.0);
      err_prev = std::max(err, 1e-4);
      h *= std::clamp(fac, 0.2, 5.0);
    } else {
      h *= std::max(0.2, 0.9 * std::pow(err, -1.0 / 5.0));
    }
    if (h < options.min_step) {
      traj.status = OdeStatus::step_underflow;
      return traj;
    }
  }
  traj.status = OdeStatus::step_underflow;  // step budget exhausted
  return traj;
}

OdeState integrate_fixed_step(const OdeRhs& rhs, const OdeState& y0,
                              double k_begin, double k_end, int n_steps) {
  if (n_steps < 1) throw std::invalid_argument("integrate_fixed_step: n_steps");
  Stages s(y0.size());
  OdeState y = y0;
  const double h = (k_end - k_begin) / n_steps;
  for (int i = 0; i < n_steps; ++i) {
    const double k = k_begin + i * h;
    rhs(k, y, s.k1);
    dp5_step(rhs, k, y, h, 1.0, s);
    y = s.ynew;
  }
  return y;
}

std::string Trajectory::to_csv() const {
  std::ostringstream out;
  out.precision(17);
  const std::size_t dim = samples.empty() ? 0 : samples.front().y.size();
  out << "k";
  for (std::size_t i = 0; i < dim; ++i) out << ",re" << i << ",im" << i;
  out << ",local_error\n";
  for (const OdeSample& sample : samples) {
    out << sample.k;
    for (const Complex& c : sample.y) out << ',' << c.real() << ',' << c.imag();
    out << ',' << sample.local_error << '\n';
  }
  return out.str();
}

std::string Trajectory::to_json_string() const {
  std::ostringstream out;
  out.precision(17);
  out << "{\"status\":\"" << to_string(status) << "\",\"error_estimate\":"
      << error_estimate << ",\"samples\":[";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const OdeSample& sample = samples[i];
    if (i) out << ',';
    out << "[" << sample.k;
    for (const Complex& c : sample.y) {
      out << ",[" << c.real() << ',' << c.imag() << ']';
    }
    out << ',' << sample.local_error << ']';
  }
  out << "]}";
  return out.str();
}

}  // namespace palais
