#include "palais/leafspace.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "palais/mobius.hpp"

namespace palais {

namespace {

Complex unit_phase(double turns) { return std::polar(1.0, 2.0 * kPi * turns); }

void emit_complex(std::ostringstream& out, const char* name, Complex c) {
  out << '"' << name << "\":[" << c.real() << ',' << c.imag() << ']';
}

std::string format_complex(Complex c) {
  std::ostringstream out;
  out << std::setprecision(6) << c.real() << (c.imag() < 0 ? " - " : " + ")
      << std::abs(c.imag()) << "i";
  return out.str();
}

}  // namespace

const char* to_string(LeafModel model) {
  switch (model) {
    case LeafModel::point: return "point";
    case LeafModel::plane: return "plane";
    case LeafModel::punctured_disc: return "punctured_disc";
    case LeafModel::cylinder: return "cylinder";
    case LeafModel::quotient_c2: return "quotient_c2";
  }
  return "unknown";
}

LeafModel stratum_model_Sy(int a, bool g0_is_zero) {
  if (a == 0) return LeafModel::plane;
  return g0_is_zero ? LeafModel::punctured_disc : LeafModel::cylinder;
}

LeafModel stratum_model_Sx(int b, bool g0_is_zero) {
  if (b == 0) return LeafModel::plane;
  return g0_is_zero ? LeafModel::punctured_disc : LeafModel::cylinder;
}

namespace {

OdeRhs suspended_rhs(const PairParams& params, bool along_Y) {
  return [params, along_Y](double, const OdeState& y, OdeState& dy) {
    const Vec4c point{y[0], y[1], y[2], y[3]};
    const Vec4c v = along_Y ? eval_Ybar(params, point) : eval_Xbar(params, point);
    dy[0] = v.t;
    dy[1] = v.s;
    dy[2] = v.x;
    dy[3] = v.y;
  };
}

// Conservation of the plane-stratum leaf coordinate along a suspended flow.
double plane_invariant_drift(const PairParams& params, bool stratum_is_sy,
                             bool along_Y, Complex coord0, double tol) {
  const Complex g0 = params.g.coeff(0);
  const Complex f0 = params.f.coeff(0);
  const double nm = static_cast<double>(params.n) / params.m;
  const auto invariant = [&](const OdeState& y) {
    const Complex t = y[0], s = y[1], x = y[2], yy = y[3];
    if (stratum_is_sy) return 1.0 / yy - t - nm * g0 * f0 * s;
    return 1.0 / x + t + g0 * f0 * s;
  };
  OdeState start = stratum_is_sy ? OdeState{0.0, 0.0, 0.0, coord0}
                                 : OdeState{0.0, 0.0, coord0, 0.0};
  IntegrateOptions options;
  options.tol = tol;
  options.k_end = 0.4;
  const Trajectory traj = integrate(suspended_rhs(params, along_Y), start, options);
  if (traj.status != OdeStatus::completed) return 1e300;
  double drift = 0.0;
  const Complex c0 = invariant(start);
  for (const OdeSample& sample : traj.samples) {
    drift = std::max(drift, std::abs(invariant(sample.y) - c0));
  }
  return drift;
}

StratumEntry make_S0_entry(const PairParams& params) {
  StratumEntry entry;
  entry.stratum = "S0";
  entry.model = LeafModel::point;
  entry.model_detail = "{*}";
  entry.condition = "all a, b";
  const Vec2c X = eval_X(params, 0.0, 0.0);
  const Vec2c Y = eval_Y(params, 0.0, 0.0);
  const double residual = norm2(X) + norm2(Y);
  entry.checks.push_back({"X and Y vanish on S0", residual == 0.0, residual});
  entry.verified = residual == 0.0;
  return entry;
}

StratumEntry make_axis_entry(const PairParams& params, bool is_sy, double tol) {
  StratumEntry entry;
  entry.stratum = is_sy ? "Sy" : "Sx";
  const Complex g0 = params.g.coeff(0);
  const bool g0_zero = g0 == Complex{0.0};
  const int exponent = is_sy ? params.a : params.b;
  entry.model = is_sy ? stratum_model_Sy(params.a, g0_zero)
                      : stratum_model_Sx(params.b, g0_zero);

  if (entry.model == LeafModel::plane) {
    entry.model_detail = "C";
    entry.condition = is_sy ? "a = 0" : "b = 0";
    const double drift_x =
        plane_invariant_drift(params, is_sy, false, Complex{0.45, 0.1}, tol);
    const double drift_y =
        plane_invariant_drift(params, is_sy, true, Complex{0.45, 0.1}, tol);
    const double bound = std::max(1e-9, 100.0 * tol);
    entry.checks.push_back(
        {"leaf coordinate conserved along Xbar", drift_x <= bound, drift_x});
    entry.checks.push_back(
        {"leaf coordinate conserved along Ybar", drift_y <= bound, drift_y});
    entry.verified = drift_x <= bound && drift_y <= bound;
    return entry;
  }

  if (entry.model == LeafModel::punctured_disc) {
    entry.model_detail = "D*";
    entry.condition = is_sy ? "a != 0 and g(0) = 0" : "b != 0 and g(0) = 0";
    // Fibers of the axis projection are leaves: both fields are vertical on
    // the stratum, i.e. their axis components vanish exactly.
    double residual = 0.0;
    for (double turn : {0.0, 0.21, 0.55}) {
      const Complex u = 0.6 * unit_phase(turn);
      const Vec2c X = is_sy ? eval_X(params, 0.0, u) : eval_X(params, u, 0.0);
      const Vec2c Y = is_sy ? eval_Y(params, 0.0, u) : eval_Y(params, u, 0.0);
      residual += is_sy ? std::abs(X.y) + std::abs(Y.y)
                        : std::abs(X.x) + std::abs(Y.x);
    }
    entry.checks.push_back(
        {"X and Y tangent to the fibers", residual == 0.0, residual});
    entry.verified = residual == 0.0;
    return entry;
  }

  // Cylinder row: closed-form translation vs fitted lift.
  entry.has_monodromy = true;
  entry.condition = is_sy ? "a != 0 and g(0) != 0" : "b != 0 and g(0) != 0";
  {
    std::ostringstream detail;
    detail << "C / <s -> s " << (is_sy ? "+" : "-") << " 2 pi i/("
           << exponent << " * " << params.m << " * g(0))>";
    entry.model_detail = detail.str();
  }
  const Complex shift = is_sy ? monodromy_Sy_shift_closed_form(params)
                              : monodromy_Sx_shift_closed_form(params);
  entry.closed_form.ds = shift;
  const Complex starts[3] = {{0.0, 0.0}, {0.3, 0.1}, {-0.15, -0.2}};
  std::vector<std::pair<Complex, Complex>> pairs;
  for (const Complex& s0 : starts) {
    const Complex s1 = is_sy ? monodromy_Sy(params, s0, tol)
                             : monodromy_Sx(params, s0, tol);
    pairs.emplace_back(s0, s1);
  }
  const HolonomyMap fitted = fit_return_map(pairs);
  entry.fitted_class = to_string(fitted.classification);
  entry.numeric.ds = fitted.translation_shift();
  entry.agreement_error = std::abs(entry.numeric.ds - shift);
  const bool class_ok = fitted.classification == MobiusClass::translation ||
                        fitted.classification == MobiusClass::identity;
  entry.checks.push_back({"fitted map is a translation", class_ok, 0.0});
  entry.checks.push_back({"numeric shift matches closed form",
                          entry.agreement_error <= tol,
                          entry.agreement_error});
  entry.verified = class_ok && entry.agreement_error <= tol;
  return entry;
}

StratumEntry make_Sxy_entry(const PairParams& params, double tol) {
  StratumEntry entry;
  entry.stratum = "Sxy";
  entry.model = LeafModel::quotient_c2;
  entry.model_detail =
      "C^2 / <(t,s) -> (t - 2 pi i f0/m^2, s + 2 pi i g0/m)>";
  entry.condition = "f0, g0 zeroth coefficients of f and 1/g";
  entry.has_monodromy = true;
  entry.closed_form = sigma2_closed_form(params);

  const double ode_tol = std::min(tol, 1e-9);
  // sigma1 must come back to the start.
  double sigma1_error = 0.0;
  {
    const LoopLift lift =
        monodromy_sigma1(params, Complex{0.2, 0.1}, Complex{-0.3, 0.05}, ode_tol);
    sigma1_error = std::abs(lift.t - Complex{0.2, 0.1}) +
                   std::abs(lift.s - Complex{-0.3, 0.05});
  }
  entry.checks.push_back(
      {"sigma1 monodromy is the identity", sigma1_error <= tol, sigma1_error});

  // sigma2: RK lift from three starts, fitted as translations in t and s.
  const Complex t_starts[3] = {{0.0, 0.0}, {0.4, 0.0}, {0.1, -0.2}};
  const Complex s_starts[3] = {{0.0, 0.0}, {0.3, 0.0}, {-0.1, 0.1}};
  std::vector<std::pair<Complex, Complex>> t_pairs, s_pairs;
  for (int i = 0; i < 3; ++i) {
    const LoopLift lift =
        monodromy_sigma2(params, t_starts[i], s_starts[i], ode_tol);
    t_pairs.emplace_back(t_starts[i], lift.t);
    s_pairs.emplace_back(s_starts[i], lift.s);
  }
  const HolonomyMap t_map = fit_return_map(t_pairs);
  const HolonomyMap s_map = fit_return_map(s_pairs);
  entry.numeric.dt = t_map.translation_shift();
  entry.numeric.ds = s_map.translation_shift();
  entry.fitted_class = std::string(to_string(t_map.classification)) + "/" +
                       to_string(s_map.classification);
  const bool classes_ok =
      (t_map.classification == MobiusClass::translation ||
       t_map.classification == MobiusClass::identity) &&
      (s_map.classification == MobiusClass::translation ||
       s_map.classification == MobiusClass::identity);
  entry.checks.push_back({"fitted maps are translations", classes_ok, 0.0});

  const double lift_error =
      std::max(std::abs(entry.numeric.dt - entry.closed_form.dt),
               std::abs(entry.numeric.ds - entry.closed_form.ds));
  entry.checks.push_back(
      {"RK lift matches closed form", lift_error <= tol, lift_error});

  const TranslationPair quad = sigma2_quadrature(params);
  const double quad_error =
      std::max(std::abs(quad.dt - entry.closed_form.dt),
               std::abs(quad.ds - entry.closed_form.ds));
  entry.checks.push_back(
      {"quadrature oracle matches closed form", quad_error <= tol, quad_error});

  entry.agreement_error = std::max(lift_error, quad_error);
  entry.verified =
      classes_ok && sigma1_error <= tol && entry.agreement_error <= tol;
  return entry;
}

}  // namespace

LeafSpaceReport table1_report(const PairParams& params, double tol) {
  const ValidationReport validation = validate(params);
  if (!validation.ok) {
    throw std::invalid_argument("table1_report: invalid params: " +
                                validation.summary());
  }
  LeafSpaceReport report;
  report.g0 = params.g.coeff(0);
  report.g0_nonzero = report.g0 != Complex{0.0};

  report.strata.push_back(make_S0_entry(params));
  report.strata.push_back(make_axis_entry(params, true, tol));
  report.strata.push_back(make_axis_entry(params, false, tol));
  report.strata.push_back(make_Sxy_entry(params, tol));

  // Separation data behind the Hausdorff verdict (cylinder case).
  if (params.a >= 1 && report.g0_nonzero) {
    const double ode_tol = std::min(tol, 1e-10);
    const Complex y0{0.4, 0.1};
    OdeState start{0.0, Complex{0.1, 0.2}, 0.0, y0};
    IntegrateOptions options;
    options.tol = ode_tol;
    options.k_end = 0.5;
    const Trajectory traj =
        integrate(suspended_rhs(params, true), start, options);
    if (traj.status == OdeStatus::completed) {
      const SeparationCoordinate c0 =
          separation_coordinate_Sy(params, start[1], start[3]);
      double worst = 0.0;
      for (const OdeSample& sample : traj.samples) {
        const SeparationCoordinate c =
            separation_coordinate_Sy(params, sample.y[1], sample.y[3]);
        worst = std::max(worst, separation_distance(c0, c));
      }
      report.separation_checks.push_back(
          {"leaf coordinate (mu,nu) constant along Ybar|Sy",
           worst <= std::max(1e-9, 100.0 * tol), worst});
    } else {
      report.separation_checks.push_back(
          {"leaf coordinate (mu,nu) constant along Ybar|Sy", false, 1e300});
    }

    const SeparationVerdict verdict = sy_separation_threshold(
        params, Complex{0.0}, y0, Complex{2.0, 0.3}, y0);
    report.separation_checks.push_back(
        {"mu-separated leaves split by a Re(s) half-space", verdict.separated,
         verdict.threshold_re_s});
  }

  report.hausdorff = report.all_verified();
  for (const NamedCheck& check : report.separation_checks) {
    report.hausdorff = report.hausdorff && check.passed;
  }
  return report;
}

bool LeafSpaceReport::all_verified() const {
  for (const StratumEntry& entry : strata) {
    if (!entry.verified) return false;
  }
  return true;
}

double chordal_distance(Complex a0, Complex a1, Complex b0, Complex b1) {
  const double num = std::abs(a0 * b1 - a1 * b0);
  const double den = std::sqrt(std::norm(a0) + std::norm(a1)) *
                     std::sqrt(std::norm(b0) + std::norm(b1));
  return num / den;
}

double cp1_leaf_map_check(std::span<const std::pair<Complex, Complex>> samples,
                          double span, double tol) {
  double worst = 0.0;
  const OdeRhs rhs = [](double, const OdeState& y, OdeState& dy) {
    dy[0] = 1.0;          // dt/dk
    dy[1] = y[1] * y[1];  // dx/dk = x^2
  };
  for (const auto& [t0, x0] : samples) {
    IntegrateOptions options;
    options.tol = tol;
    options.k_end = span;
    options.admissible = [](double, const OdeState& y) {
      return std::abs(y[1]) < 50.0;
    };
    const Trajectory traj = integrate(rhs, {t0, x0}, options);
    if (traj.status != OdeStatus::completed) {
      throw std::runtime_error("cp1_leaf_map_check: trajectory escaped");
    }
    for (const OdeSample& sample : traj.samples) {
      const Complex t = sample.y[0], x = sample.y[1];
      worst = std::max(worst,
                       chordal_distance(x, t * x + 1.0, x0, t0 * x0 + 1.0));
    }
  }
  return worst;
}

namespace {

const OdeRhs kProp26Rhs = [](double, const OdeState& y, OdeState& dy) {
  dy[0] = 1.0;
  dy[1] = 4.0 * y[2];
  dy[2] = -y[1];
};

double h26(const OdeState& y) {
  const double x = y[1].real(), yy = y[2].real();
  return x * x + 4.0 * yy * yy;
}

double radius_sq_26(const OdeState& y) {
  const double x = y[1].real(), yy = y[2].real();
  return x * x + yy * yy;
}

}  // namespace

Prop26Witness prop26_witness(double epsilon, std::span<const double> deltas,
                             double tol) {
  Prop26Witness witness;
  witness.epsilon = epsilon;
  witness.u1_mode = false;
  witness.hausdorff = false;  // the merging pair below cannot be separated
  double previous = epsilon;
  for (double delta : deltas) {
    if (!(delta > 0.0 && delta < epsilon / 4.0 && delta < previous)) {
      throw std::invalid_argument(
          "prop26_witness: deltas must decrease within (0, epsilon/4)");
    }
    previous = delta;
    Prop26Connection conn;
    conn.delta = delta;
    const double c = epsilon / 2.0 - delta;
    IntegrateOptions options;
    options.tol = tol;
    options.k_end = 2.2;
    options.admissible = [epsilon](double, const OdeState& y) {
      return radius_sq_26(y) < epsilon * epsilon;
    };
    conn.trajectory = integrate(kProp26Rhs, {0.0, 0.0, c}, options);
    if (conn.trajectory.status != OdeStatus::completed) {
      witness.connections.push_back(std::move(conn));
      continue;
    }
    const OdeState start{0.0, 0.0, c};
    conn.h_drift = 0.0;
    conn.max_radius_sq = 0.0;
    for (const OdeSample& sample : conn.trajectory.samples) {
      conn.h_drift = std::max(conn.h_drift, std::abs(h26(sample.y) - h26(start)));
      conn.max_radius_sq = std::max(conn.max_radius_sq, radius_sq_26(sample.y));
    }
    // First return of x to 0 with y < 0, bracketed on the samples and
    // refined by bisection with short re-integrations.
    for (std::size_t i = 0; i + 1 < conn.trajectory.samples.size(); ++i) {
      const OdeSample& a = conn.trajectory.samples[i];
      const OdeSample& b = conn.trajectory.samples[i + 1];
      const double xa = a.y[1].real(), xb = b.y[1].real();
      if (a.k < 0.2 || xa == 0.0 || xa * xb > 0.0) continue;
      if (std::min(a.y[2].real(), b.y[2].real()) >= 0.0) continue;
      double lo = a.k, hi = b.k;
      const auto x_at = [&](double kk) {
        if (kk <= a.k) return xa;
        IntegrateOptions probe;
        probe.tol = std::min(tol, 1e-12);
        probe.k_begin = a.k;
        probe.k_end = kk;
        return integrate(kProp26Rhs, a.y, probe).final_state()[1].real();
      };
      for (int iter = 0; iter < 80 && hi - lo > 1e-14; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (x_at(mid) * xa > 0.0) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      conn.t_star = 0.5 * (lo + hi);
      IntegrateOptions probe;
      probe.tol = std::min(tol, 1e-12);
      probe.k_begin = a.k;
      probe.k_end = conn.t_star;
      const OdeState at_star = integrate(kProp26Rhs, a.y, probe).final_state();
      conn.endpoint_error = std::hypot(at_star[1].real(),
                                       at_star[2].real() + c);
      conn.found = true;
      break;
    }
    witness.connections.push_back(std::move(conn));
  }
  return witness;
}

Prop26Witness prop26_hausdorff_check(double epsilon, double tol) {
  Prop26Witness witness;
  witness.epsilon = epsilon;
  witness.u1_mode = true;
  witness.max_h_drift = 0.0;
  for (double level : {0.15, 0.45, 0.8}) {
    const double r = std::sqrt(level) * epsilon;
    for (int j = 0; j < 6; ++j) {
      const double theta = kPi * j / 3.0;
      const OdeState start{0.0, r * std::cos(theta), 0.5 * r * std::sin(theta)};
      IntegrateOptions options;
      options.tol = tol;
      options.k_end = 3.3;
      options.admissible = [epsilon](double, const OdeState& y) {
        return h26(y) < epsilon * epsilon;
      };
      const Trajectory traj = integrate(kProp26Rhs, start, options);
      if (traj.status != OdeStatus::completed) {
        witness.max_h_drift = 1e300;
        continue;
      }
      for (const OdeSample& sample : traj.samples) {
        witness.max_h_drift =
            std::max(witness.max_h_drift, std::abs(h26(sample.y) - h26(start)));
      }
    }
  }
  witness.hausdorff = witness.max_h_drift <= std::max(1e-10, 100.0 * tol);
  return witness;
}

SeparationCoordinate separation_coordinate_Sy(const PairParams& params,
                                              Complex s, Complex y) {
  if (y == Complex{0.0}) {
    throw std::domain_error("separation_coordinate_Sy: y = 0");
  }
  const Complex g0 = params.g.coeff(0);
  if (g0 == Complex{0.0} || params.a < 1) {
    throw std::domain_error(
        "separation_coordinate_Sy: defined for a >= 1 and g(0) != 0");
  }
  const Complex c = static_cast<double>(params.a) * params.m * g0;
  const Complex w = s - std::log(y) / c;
  const Complex lattice = kTwoPiI / c;
  const Complex u = w / lattice;
  const Complex reduced = (u - std::round(u.real())) * lattice;
  return {reduced.real(), reduced.imag(), lattice};
}

double separation_distance(const SeparationCoordinate& a,
                           const SeparationCoordinate& b) {
  const Complex wa{a.mu, a.nu};
  const Complex wb{b.mu, b.nu};
  double best = 1e300;
  for (int j = -1; j <= 1; ++j) {
    best = std::min(best,
                    std::abs(wa - wb - static_cast<double>(j) * a.lattice));
  }
  return best;
}

SeparationVerdict sy_separation_threshold(const PairParams& params, Complex s1,
                                          Complex y1, Complex s2, Complex y2) {
  const Complex g0 = params.g.coeff(0);
  const Complex c = static_cast<double>(params.a) * params.m * g0;
  // Transport the second leaf to the fiber of the first along the closed-form
  // solution s = s0 + (log y - log y0) / (a m g(0)).
  const Complex s2_at_y1 = s2 + (std::log(y1) - std::log(y2)) / c;
  double lo = s1.real(), hi = s2_at_y1.real();
  if (lo > hi) std::swap(lo, hi);
  SeparationVerdict verdict;
  verdict.threshold_re_s = lo + 1.0;
  verdict.separated = hi > verdict.threshold_re_s;
  return verdict;
}

Vec2c flow_X(const PairParams& params, Complex time, Vec2c p, double tol) {
  const OdeRhs rhs = [&params, time](double, const OdeState& y, OdeState& dy) {
    const Vec2c v = eval_X(params, y[0], y[1]);
    dy[0] = time * v.x;
    dy[1] = time * v.y;
  };
  IntegrateOptions options;
  options.tol = tol;
  options.admissible = [](double, const OdeState& y) {
    return std::abs(y[0]) < 10.0 && std::abs(y[1]) < 10.0;
  };
  const Trajectory traj = integrate(rhs, {p.x, p.y}, options);
  if (traj.status != OdeStatus::completed) {
    throw std::runtime_error("flow_X: trajectory left the domain");
  }
  return {traj.final_state()[0], traj.final_state()[1]};
}

Vec2c flow_Y(const PairParams& params, Complex time, Vec2c p, double tol) {
  const OdeRhs rhs = [&params, time](double, const OdeState& y, OdeState& dy) {
    const Vec2c v = eval_Y(params, y[0], y[1]);
    dy[0] = time * v.x;
    dy[1] = time * v.y;
  };
  IntegrateOptions options;
  options.tol = tol;
  options.admissible = [](double, const OdeState& y) {
    return std::abs(y[0]) < 10.0 && std::abs(y[1]) < 10.0;
  };
  const Trajectory traj = integrate(rhs, {p.x, p.y}, options);
  if (traj.status != OdeStatus::completed) {
    throw std::runtime_error("flow_Y: trajectory left the domain");
  }
  return {traj.final_state()[0], traj.final_state()[1]};
}

double local_action_check(const PairParams& params, Complex t1, Complex s1,
                          Complex t2, Complex s2, Vec2c p, double tol) {
  Vec2c via = flow_Y(params, s2, p, tol);
  via = flow_X(params, t2, via, tol);
  via = flow_Y(params, s1, via, tol);
  via = flow_X(params, t1, via, tol);
  Vec2c direct = flow_Y(params, s1 + s2, p, tol);
  direct = flow_X(params, t1 + t2, direct, tol);
  return std::sqrt(std::norm(via.x - direct.x) + std::norm(via.y - direct.y));
}

std::string LeafSpaceReport::to_json_string() const {
  std::ostringstream out;
  out.precision(17);
  out << "{\"strata\":[";
  for (std::size_t i = 0; i < strata.size(); ++i) {
    const StratumEntry& entry = strata[i];
    if (i) out << ',';
    out << "{\"stratum\":\"" << entry.stratum << "\",\"model\":\""
        << to_string(entry.model) << "\",\"model_detail\":\""
        << entry.model_detail << "\",\"condition\":\"" << entry.condition
        << "\",\"has_monodromy\":" << (entry.has_monodromy ? "true" : "false");
    if (entry.has_monodromy) {
      out << ',';
      emit_complex(out, "closed_form_dt", entry.closed_form.dt);
      out << ',';
      emit_complex(out, "closed_form_ds", entry.closed_form.ds);
      out << ',';
      emit_complex(out, "numeric_dt", entry.numeric.dt);
      out << ',';
      emit_complex(out, "numeric_ds", entry.numeric.ds);
      out << ",\"fitted_class\":\"" << entry.fitted_class << '"';
    }
    out << ",\"agreement_error\":" << entry.agreement_error
        << ",\"verified\":" << (entry.verified ? "true" : "false")
        << ",\"checks\":[";
    for (std::size_t j = 0; j < entry.checks.size(); ++j) {
      if (j) out << ',';
      out << "{\"name\":\"" << entry.checks[j].name << "\",\"passed\":"
          << (entry.checks[j].passed ? "true" : "false")
          << ",\"value\":" << entry.checks[j].value << '}';
    }
    out << "]}";
  }
  out << "],\"separation_checks\":[";
  for (std::size_t j = 0; j < separation_checks.size(); ++j) {
    if (j) out << ',';
    out << "{\"name\":\"" << separation_checks[j].name << "\",\"passed\":"
        << (separation_checks[j].passed ? "true" : "false")
        << ",\"value\":" << separation_checks[j].value << '}';
  }
  out << "],\"hausdorff\":" << (hausdorff ? "true" : "false") << ',';
  emit_complex(out, "g0", g0);
  out << '}';
  return out.str();
}

std::string LeafSpaceReport::to_table() const {
  std::ostringstream out;
  out << std::left << std::setw(6) << "layer" << std::setw(28) << "condition"
      << std::setw(52) << "leaf space" << std::setw(12) << "error"
      << "verified\n";
  out << std::string(104, '-') << '\n';
  for (const StratumEntry& entry : strata) {
    std::ostringstream err;
    if (entry.has_monodromy) {
      err << std::scientific << std::setprecision(1) << entry.agreement_error;
    } else {
      err << "-";
    }
    out << std::left << std::setw(6) << entry.stratum << std::setw(28)
        << entry.condition << std::setw(52) << entry.model_detail
        << std::setw(12) << err.str() << (entry.verified ? "yes" : "NO")
        << '\n';
    if (entry.has_monodromy) {
      out << "       generator: closed form (dt, ds) = ("
          << format_complex(entry.closed_form.dt) << ", "
          << format_complex(entry.closed_form.ds) << ")\n"
          << "                  numeric     (dt, ds) = ("
          << format_complex(entry.numeric.dt) << ", "
          << format_complex(entry.numeric.ds) << ")  ["
          << entry.fitted_class << "]\n";
    }
  }
  out << "hausdorff: " << (hausdorff ? "yes" : "NO") << '\n';
  return out.str();
}

std::string Prop26Witness::to_json_string() const {
  std::ostringstream out;
  out.precision(17);
  out << "{\"mode\":\"" << (u1_mode ? "invariant_ellipse" : "ball")
      << "\",\"epsilon\":" << epsilon
      << ",\"hausdorff\":" << (hausdorff ? "true" : "false");
  if (u1_mode) {
    out << ",\"max_h_drift\":" << max_h_drift << ",\"leaf_space\":\"interval "
        << "[0, " << epsilon * epsilon << ") of H-values\"";
  } else {
    out << ",\"connections\":[";
    for (std::size_t i = 0; i < connections.size(); ++i) {
      const Prop26Connection& c = connections[i];
      if (i) out << ',';
      out << "{\"delta\":" << c.delta << ",\"found\":"
          << (c.found ? "true" : "false") << ",\"t_star\":" << c.t_star
          << ",\"endpoint_error\":" << c.endpoint_error
          << ",\"h_drift\":" << c.h_drift
          << ",\"max_radius_sq\":" << c.max_radius_sq << '}';
    }
    out << ']';
  }
  out << '}';
  return out.str();
}

}  // namespace palais
