#include "palais/lift.hpp"

#include <cmath>
#include <stdexcept>

#include "palais/quadrature.hpp"

namespace palais {

namespace {

Complex unit_phase(double turns) {
  return std::polar(1.0, 2.0 * kPi * turns);
}

struct LiftFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_completed(const Trajectory& traj, const char* what) {
  if (traj.status == OdeStatus::completed) return;
  throw LiftFailure(std::string(what) + ": integration " +
                    to_string(traj.status));
}

}  // namespace

BaseLoop BaseLoop::sigma1(const PairParams& params, double radius) {
  BaseLoop loop(Kind::sigma1);
  loop.radius_ = radius;
  loop.wx_ = params.m;
  loop.wy_ = -params.n;
  return loop;
}

BaseLoop BaseLoop::sigma2(const PairParams& params, double radius) {
  BaseLoop loop(Kind::sigma2);
  loop.radius_ = radius;
  loop.wx_ = -params.b;
  loop.wy_ = params.a;
  return loop;
}

BaseLoop BaseLoop::circle(Complex center, double radius, int winding) {
  BaseLoop loop(Kind::circle);
  loop.center_ = center;
  loop.radius_ = radius;
  loop.wx_ = winding;
  loop.wy_ = 0;
  return loop;
}

BaseLoop BaseLoop::custom(std::vector<Vec2c> samples) {
  if (samples.size() < 2) {
    throw std::invalid_argument("BaseLoop::custom: need at least 2 samples");
  }
  BaseLoop loop(Kind::custom);
  loop.samples_ = std::move(samples);
  return loop;
}

Vec2c BaseLoop::at(double k) const {
  switch (kind_) {
    case Kind::sigma1:
    case Kind::sigma2:
      return {radius_ * unit_phase(wx_ * k), radius_ * unit_phase(wy_ * k)};
    case Kind::circle:
      return {center_ + radius_ * unit_phase(wx_ * k), 0.0};
    case Kind::custom: {
      const double pos = k * static_cast<double>(samples_.size() - 1);
      const std::size_t i = std::min(static_cast<std::size_t>(pos),
                                     samples_.size() - 2);
      const double frac = pos - static_cast<double>(i);
      return {samples_[i].x + frac * (samples_[i + 1].x - samples_[i].x),
              samples_[i].y + frac * (samples_[i + 1].y - samples_[i].y)};
    }
  }
  return {};
}

Vec2c BaseLoop::velocity(double k) const {
  switch (kind_) {
    case Kind::sigma1:
    case Kind::sigma2: {
      const Vec2c p = at(k);
      return {kTwoPiI * static_cast<double>(wx_) * p.x,
              kTwoPiI * static_cast<double>(wy_) * p.y};
    }
    case Kind::circle:
      return {kTwoPiI * static_cast<double>(wx_) * radius_ * unit_phase(wx_ * k),
              0.0};
    case Kind::custom: {
      const double segments = static_cast<double>(samples_.size() - 1);
      const std::size_t i = std::min(static_cast<std::size_t>(k * segments),
                                     samples_.size() - 2);
      return {(samples_[i + 1].x - samples_[i].x) * segments,
              (samples_[i + 1].y - samples_[i].y) * segments};
    }
  }
  return {};
}

bool BaseLoop::is_closed(double tol) const {
  const Vec2c p0 = at(0.0);
  const Vec2c p1 = at(1.0);
  return std::abs(p1.x - p0.x) <= tol && std::abs(p1.y - p0.y) <= tol;
}

LoopLift monodromy_sigma1(const PairParams& params, Complex t0, Complex s0,
                          double tol, double radius) {
  const BaseLoop loop = BaseLoop::sigma1(params, radius);
  // sigma1 is tangent to X, so the lift rides Xbar alone: dt/dk is the
  // tangency coefficient against X, ds/dk = 0 identically.
  const OdeRhs rhs = [&params, &loop](double k, const OdeState&, OdeState& dy) {
    const Vec2c p = loop.at(k);
    const Vec2c v = loop.velocity(k);
    const Vec2c X = eval_X(params, p.x, p.y);
    dy[0] = v.x / X.x;
    dy[1] = 0.0;
  };
  IntegrateOptions options;
  options.tol = tol;
  LoopLift lift;
  lift.trajectory = integrate(rhs, {t0, s0}, options);
  require_completed(lift.trajectory, "monodromy_sigma1");
  lift.t = lift.trajectory.final_state()[0];
  lift.s = lift.trajectory.final_state()[1];
  lift.radius_used = radius;
  return lift;
}

double zero_free_loop_radius(const LaurentSeries& s, double hint) {
  const LaurentSeries ds = s.derivative();
  double radius = hint;
  for (int attempt = 0; attempt < 24; ++attempt) {
    // Zeros of s in 0 < |z| <= radius, counted by the argument principle;
    // the zero at the origin (order of s) does not obstruct the loop.
    double min_mod = 1e300;
    const Complex winding_integral = gauss_legendre_64(
        [&](double k) {
          const Complex z = radius * unit_phase(k);
          const Complex sz = s.eval(z);
          min_mod = std::min(min_mod, std::abs(sz));
          return ds.eval(z) * kTwoPiI * z / sz;
        },
        0.0, 1.0, 8);
    const double zeros_inside = (winding_integral / kTwoPiI).real();
    const double extra = zeros_inside - s.order();
    if (min_mod > 1e-9 && std::abs(extra) < 0.25) return radius;
    radius *= 0.5;
  }
  throw std::runtime_error(
      "zero_free_loop_radius: zeros on every candidate loop radius");
}

double sigma2_safe_radius(const PairParams& params, double hint) {
  return zero_free_loop_radius(params.g, hint);
}

LoopLift monodromy_sigma2(const PairParams& params, Complex t0, Complex s0,
                          double tol, double radius) {
  // base-circle radius in the first-integral coordinate z = x^n y^m
  const double rho_z = sigma2_safe_radius(params, radius);
  const double rho = std::pow(rho_z, 1.0 / (params.n + params.m));
  const BaseLoop loop = BaseLoop::sigma2(params, rho);
  const OdeRhs rhs = [&params, &loop](double k, const OdeState&, OdeState& dy) {
    const Vec2c p = loop.at(k);
    const Vec2c v = loop.velocity(k);
    const Vec2c X = eval_X(params, p.x, p.y);
    const Vec2c Y = eval_Y(params, p.x, p.y);
    const Complex det = X.x * Y.y - Y.x * X.y;
    dy[0] = (v.x * Y.y - Y.x * v.y) / det;  // dt/dk
    dy[1] = (X.x * v.y - v.x * X.y) / det;  // ds/dk
  };
  IntegrateOptions options;
  options.tol = tol;
  LoopLift lift;
  lift.trajectory = integrate(rhs, {t0, s0}, options);
  require_completed(lift.trajectory, "monodromy_sigma2");
  lift.t = lift.trajectory.final_state()[0];
  lift.s = lift.trajectory.final_state()[1];
  lift.radius_used = rho_z;
  return lift;
}

TranslationPair sigma2_closed_form(const PairParams& params) {
  const Complex f0 = params.f.coeff(0);
  const Complex g0 =
      params.g.reciprocal(kDefaultTruncation).coeff(0);
  const double m = params.m;
  return {-kTwoPiI * f0 / (m * m), kTwoPiI * g0 / m};
}

TranslationPair sigma2_quadrature(const PairParams& params, double radius) {
  const double rho_z = sigma2_safe_radius(params, radius);
  const int e = params.det();
  const double m = params.m;
  const auto z_of = [rho_z, e](double k) { return rho_z * unit_phase(e * k); };
  const Complex dt = gauss_legendre_64(
      [&](double k) {
        return -kTwoPiI * params.f.eval(z_of(k)) / (m * m);
      },
      0.0, 1.0, 8);
  const Complex ds = gauss_legendre_64(
      [&](double k) { return kTwoPiI / (m * params.g.eval(z_of(k))); }, 0.0,
      1.0, 8);
  return {dt, ds};
}

namespace {

// Fiber monodromy over a punctured-axis loop: the restricted field is
// d/ds + g(0) u (c0 + P_axis(u)) d/du, so ds/dk = u'(k) / (g(0) u (c0 + P_axis)).
Complex axis_monodromy(const LaurentSeries& g, double c0,
                       const LaurentSeries& p_axis, double axis_scale,
                       Complex s0, double tol, double radius,
                       const char* what) {
  const Complex g0 = g.is_zero() ? Complex{0.0} : g.coeff(0);
  if (g0 == Complex{0.0}) {
    throw std::domain_error(std::string(what) +
                            ": g(0) = 0, the stratum's leaf space is a "
                            "punctured disc with no monodromy map");
  }
  double rho = radius;
  for (int attempt = 0;; ++attempt) {
    double min_denom = 1e300;
    for (int i = 0; i < 64; ++i) {
      const Complex u = rho * unit_phase(i / 64.0);
      min_denom = std::min(
          min_denom, std::abs(c0 + axis_scale * p_axis.eval(u)));
    }
    if (min_denom > 0.25 * std::abs(c0)) break;
    rho *= 0.5;
    if (attempt >= 20) {
      throw std::runtime_error(std::string(what) +
                               ": axis denominator vanishes on every loop");
    }
  }
  const OdeRhs rhs = [&](double k, const OdeState&, OdeState& dy) {
    const Complex u = rho * unit_phase(k);
    dy[0] = kTwoPiI / (g0 * (c0 + axis_scale * p_axis.eval(u)));
  };
  IntegrateOptions options;
  options.tol = tol;
  const Trajectory traj = integrate(rhs, {s0}, options);
  require_completed(traj, what);
  return traj.final_state()[0];
}

}  // namespace

Complex monodromy_Sy(const PairParams& params, Complex s0, double tol,
                     double radius) {
  if (params.a < 1) {
    throw std::domain_error(
        "monodromy_Sy: a = 0, the S_y leaf space is a plane with no "
        "monodromy map");
  }
  return axis_monodromy(params.g, static_cast<double>(params.a) * params.m,
                        axis_P_x_zero(params),
                        -static_cast<double>(params.n) / params.m, s0, tol,
                        radius, "monodromy_Sy");
}

Complex monodromy_Sy_shift_closed_form(const PairParams& params) {
  const Complex g0 = params.g.coeff(0);
  return kTwoPiI / (static_cast<double>(params.a) * params.m * g0);
}

Complex monodromy_Sx(const PairParams& params, Complex s0, double tol,
                     double radius) {
  if (params.b < 1) {
    throw std::domain_error(
        "monodromy_Sx: b = 0, the S_x leaf space is a plane with no "
        "monodromy map");
  }
  return axis_monodromy(params.g, -static_cast<double>(params.b) * params.m,
                        axis_P_y_zero(params), 1.0, s0, tol, radius,
                        "monodromy_Sx");
}

Complex monodromy_Sx_shift_closed_form(const PairParams& params) {
  const Complex g0 = params.g.coeff(0);
  return -kTwoPiI / (static_cast<double>(params.b) * params.m * g0);
}

HolonomyOfD holonomy_of_D(const PairParams& params, Complex z0,
                          double loop_radius, double tol) {
  const double m = params.m;
  const OdeRhs rhs = [&](double k, const OdeState& y, OdeState& dy) {
    const Complex w = loop_radius * unit_phase(k);
    const Complex fw = params.f.is_zero() ? Complex{0.0} : params.f.eval(w);
    dy[0] = -kTwoPiI * y[0] * (1.0 + w * y[0] * fw / m);
  };
  IntegrateOptions options;
  options.tol = tol;
  options.admissible = [](double, const OdeState& y) {
    return std::abs(y[0]) < 10.0;
  };
  HolonomyOfD result;
  result.trajectory = integrate(rhs, {z0}, options);
  require_completed(result.trajectory, "holonomy_of_D");
  result.endpoint = result.trajectory.final_state()[0];

  const Complex f0 = params.f.coeff(0);
  result.closed_form_with_m =
      z0 / (1.0 + kTwoPiI * loop_radius * f0 * z0 / m);
  result.closed_form_without_m = z0 / (1.0 + kTwoPiI * loop_radius * f0 * z0);
  // Exact integration of the Riccati substitution gives
  // 1/z(1) = 1/z(0) + 2 pi i r Q / m with Q the mean of f over the loop.
  const Complex Q = gauss_legendre_64(
      [&](double k) {
        return params.f.is_zero() ? Complex{0.0}
                                  : params.f.eval(loop_radius * unit_phase(k));
      },
      0.0, 1.0, 8);
  result.quadrature = z0 / (1.0 + kTwoPiI * loop_radius * Q * z0 / m);

  const double d_with = std::abs(result.endpoint - result.closed_form_with_m);
  const double d_without =
      std::abs(result.endpoint - result.closed_form_without_m);
  const bool w_ok = d_with <= 1e-8;
  const bool wo_ok = d_without <= 1e-8;
  if (w_ok && wo_ok) {
    result.matched = "both (coincide at m = 1 or f0 = 0)";
  } else if (w_ok) {
    result.matched = "with_1/m";
  } else if (wo_ok) {
    result.matched = "without_1/m";
  } else {
    result.matched = "neither";
  }
  return result;
}

SingularLiftReport lift_singular_chart_loop(const PairParams& params_in,
                                            double delta,
                                            std::optional<Complex> z0,
                                            double epsilon, double tol,
                                            double tau) {
  SingularLiftReport report;
  PairParams params = params_in;
  if (params.det() == -1) {
    params = swap_axes(params);
    report.axes_swapped = true;
  }
  report.delta = delta;
  report.tau = tau;
  const int b = params.b, m = params.m, n = params.n;

  // S(k) = delta^b e^{2 pi i b k} f(delta^m e^{2 pi i m k}), termwise so the
  // pole of f never produces large intermediates.
  const auto S = [&](double k) {
    Complex acc{0.0};
    for (int p = params.f.lowest_index(); p <= params.f.truncation_degree();
         ++p) {
      const Complex fp = params.f.coeff(p);
      if (fp == Complex{0.0}) continue;
      const int q = b + m * p;
      acc += fp * std::pow(delta, q) * unit_phase(q * k);
    }
    return acc;
  };

  const Complex start =
      z0.value_or(Complex{std::pow(delta, 1.0 / (std::max(m, n) + tau)), 0.0});
  report.z0_abs = std::abs(start);

  const double outer = std::pow(epsilon, 1.0 / m);
  const double inner = std::pow(delta / epsilon, 1.0 / n);
  const OdeRhs rhs = [&](double k, const OdeState& y, OdeState& dy) {
    dy[0] = kTwoPiI * y[0] *
            (-static_cast<double>(b) + y[0] * S(k) / static_cast<double>(m));
  };
  IntegrateOptions options;
  options.tol = tol;
  options.admissible = [inner, outer](double, const OdeState& y) {
    const double az = std::abs(y[0]);
    return az > inner && az < outer;
  };
  report.trajectory = integrate(rhs, {start}, options);
  report.stayed_in_V = report.trajectory.status == OdeStatus::completed;

  const Complex c0 = report.trajectory.samples.front().y[0];
  const double c0_sq = std::norm(c0);
  for (const OdeSample& sample : report.trajectory.samples) {
    report.sup_delta_b_f = std::max(report.sup_delta_b_f, std::abs(S(sample.k)));
    if (sample.k <= 0.0) continue;
    const Complex c = sample.y[0] * unit_phase(b * sample.k);
    report.beta_empirical =
        std::max(report.beta_empirical, std::abs(c - c0) / (c0_sq * sample.k));
  }
  return report;
}

}  // namespace palais
