#include "palais/semicomplete.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "palais/quadrature.hpp"

namespace palais {

namespace {

bool is_zero_c(Complex c) { return c.real() == 0.0 && c.imag() == 0.0; }

void emit_complex(std::ostringstream& out, const char* name, Complex c) {
  out << '"' << name << "\":[" << c.real() << ',' << c.imag() << ']';
}

}  // namespace

const char* to_string(UnivalenceStatus status) {
  switch (status) {
    case UnivalenceStatus::univalent: return "univalent";
    case UnivalenceStatus::not_univalent: return "not_univalent";
    case UnivalenceStatus::outside_classified_family:
      return "outside_classified_family";
  }
  return "unknown";
}

bool homogeneous_component_test(int a, int b, int m, int n, int l) {
  const long v = static_cast<long>(l) * (static_cast<long>(a) * m -
                                         static_cast<long>(b) * n);
  return v == 1 || v == -1;
}

ProjectedFieldZ projected_field_Z(const PairParams& params) {
  return {1 + params.g.order(), residue_of_inverse_wg(params.g)};
}

UnivalenceVerdict classify_univalence(const PairParams& params) {
  UnivalenceVerdict verdict;
  const ValidationReport validation = validate(params);
  if (!validation.ok) {
    verdict.status = UnivalenceStatus::outside_classified_family;
    verdict.decisive = "outside the classified family: " + validation.summary();
    for (const auto& issue : validation.violations) {
      verdict.reasons.push_back({issue.constraint, false, Complex{0.0}});
    }
    return verdict;
  }

  const Complex g0 = params.g.coeff(0);
  const Complex g1 = params.g.derivative_at_zero(1);
  const Complex g2 = params.g.derivative_at_zero(2);
  const Complex f0 = params.f.coeff(0);
  const int l = params.g.order();
  const Complex residue = residue_of_inverse_wg(params.g);

  verdict.reasons.push_back({"g(0)", !is_zero_c(g0), g0});
  verdict.reasons.push_back({"g'(0)", !is_zero_c(g1), g1});
  verdict.reasons.push_back({"g''(0) == 0", is_zero_c(g2), g2});
  verdict.reasons.push_back({"f0 == 0", is_zero_c(f0), f0});
  verdict.reasons.push_back(
      {"order l of g", true, Complex{static_cast<double>(l), 0.0}});
  verdict.reasons.push_back(
      {"l(am-bn) in {-1,1}",
       homogeneous_component_test(params.a, params.b, params.m, params.n, l),
       Complex{static_cast<double>(l * params.det()), 0.0}});
  verdict.reasons.push_back({"residue of dw/(w g(w)) == 0", is_zero_c(residue),
                             residue});

  if (!is_zero_c(g0)) {
    verdict.status = UnivalenceStatus::univalent;
    verdict.decisive = "condition 1: g(0) != 0";
    return verdict;
  }
  if (l >= 2) {
    verdict.status = UnivalenceStatus::not_univalent;
    verdict.decisive = "homogeneous component: l = " + std::to_string(l) +
                       " gives l(am-bn) outside {-1,1}";
    return verdict;
  }
  // l == 1, so g'(0) != 0.
  if (!is_zero_c(residue)) {
    verdict.status = UnivalenceStatus::not_univalent;
    verdict.decisive = "nonzero residue of dw/(w g(w))";
    return verdict;
  }
  if (!is_zero_c(f0)) {
    verdict.status = UnivalenceStatus::not_univalent;
    verdict.decisive = "f0 != 0: the holonomy of D is parabolic";
    return verdict;
  }
  verdict.status = UnivalenceStatus::univalent;
  verdict.decisive = "condition 2: g(0) = g''(0) = f0 = 0, g'(0) != 0";
  return verdict;
}

std::string UnivalenceVerdict::to_json_string() const {
  std::ostringstream out;
  out.precision(17);
  out << "{\"status\":\"" << to_string(status) << "\",\"decisive\":\""
      << decisive << "\",\"reasons\":[";
  for (std::size_t i = 0; i < reasons.size(); ++i) {
    if (i) out << ',';
    out << "{\"criterion\":\"" << reasons[i].criterion << "\",\"passed\":"
        << (reasons[i].passed ? "true" : "false") << ',';
    emit_complex(out, "value", reasons[i].value);
    out << '}';
  }
  out << "]}";
  return out.str();
}

PathPiece PathPiece::arc(Complex center, double radius, double angle0,
                         double angle1) {
  PathPiece piece;
  piece.type = Type::arc;
  piece.center = center;
  piece.radius = radius;
  piece.angle0 = angle0;
  piece.angle1 = angle1;
  return piece;
}

PathPiece PathPiece::segment(Complex from, Complex to) {
  PathPiece piece;
  piece.type = Type::segment;
  piece.w0 = from;
  piece.w1 = to;
  return piece;
}

Complex PathPiece::at(double u) const {
  if (type == Type::arc) {
    const double angle = angle0 + u * (angle1 - angle0);
    return center + std::polar(radius, angle);
  }
  return w0 + u * (w1 - w0);
}

Complex PathPiece::velocity(double u) const {
  if (type == Type::arc) {
    const double angle = angle0 + u * (angle1 - angle0);
    return Complex{0.0, angle1 - angle0} * std::polar(radius, angle);
  }
  return w1 - w0;
}

PlanarPath PlanarPath::polyline(const std::vector<Complex>& points) {
  if (points.size() < 2) {
    throw std::invalid_argument("PlanarPath::polyline: need >= 2 points");
  }
  PlanarPath path;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    path.pieces.push_back(PathPiece::segment(points[i], points[i + 1]));
  }
  return path;
}

Complex PlanarPath::start() const { return pieces.front().at(0.0); }
Complex PlanarPath::end() const { return pieces.back().at(1.0); }

Complex time_form_integral(const std::function<Complex(Complex)>& field,
                           const PlanarPath& path, double tol) {
  Complex total{0.0};
  for (const PathPiece& piece : path.pieces) {
    total += adaptive_quadrature(
        [&](double u) {
          const Complex w = piece.at(u);
          const Complex a = field(w);
          if (std::abs(a) < 1e-300) {
            throw std::domain_error(
                "time_form_integral: field vanishes on the path");
          }
          return piece.velocity(u) / a;
        },
        0.0, 1.0, tol);
  }
  return total;
}

Complex time_form_integral(
    const std::function<Vec2c(Complex, Complex)>& field,
    const ParametrizedPath2& path, double tol, double tangency_tol) {
  // Tangency audit on a sample grid before integrating.
  for (int i = 0; i <= 32; ++i) {
    const double u = i / 32.0;
    const Vec2c p = path.point(u);
    const Vec2c v = path.velocity(u);
    const Vec2c F = field(p.x, p.y);
    const double cross = std::abs(v.x * F.y - v.y * F.x);
    const double scale = norm2(v) * norm2(F);
    if (scale > 0.0 && cross > tangency_tol * scale) {
      throw std::domain_error("time_form_integral: path is not tangent to the field");
    }
  }
  return adaptive_quadrature(
      [&](double u) {
        const Vec2c p = path.point(u);
        const Vec2c v = path.velocity(u);
        const Vec2c F = field(p.x, p.y);
        // Pair against the larger field component.
        if (std::abs(F.x) >= std::abs(F.y)) {
          if (std::abs(F.x) < 1e-300) {
            throw std::domain_error(
                "time_form_integral: field vanishes on the path");
          }
          return v.x / F.x;
        }
        return v.y / F.y;
      },
      0.0, 1.0, tol);
}

namespace {

// Open near-loop witness: an arc (full turn for order-2 Z, 2 pi / l for
// higher order) closed up to an endpoint solved so the total time-form
// integral vanishes.
std::optional<NonsemicompleteWitness> near_loop_witness(
    const PairParams& params) {
  const LaurentSeries& g = params.g;
  const int l = g.order();
  const auto field = [&g](Complex w) { return w * g.eval(w); };

  const double rho = 0.4 * zero_free_loop_radius(g, 0.5);
  const double turn = (l == 1) ? 2.0 * kPi : 2.0 * kPi / l;
  const PathPiece arc = PathPiece::arc(Complex{0.0}, rho, 0.0, turn);
  PlanarPath arc_only;
  arc_only.pieces.push_back(arc);
  const Complex arc_integral = time_form_integral(field, arc_only, 1e-13);

  const Complex anchor = arc.at(1.0);
  Complex w1 = anchor;
  Complex total = arc_integral;
  bool converged = false;
  for (int iter = 0; iter < 80; ++iter) {
    if (std::abs(total) <= 1e-11) {
      converged = true;
      break;
    }
    // Newton step on F(w1) = arc_integral + int_{anchor}^{w1} dw/(w g(w)).
    w1 -= total * field(w1);
    if (std::abs(w1) < 0.2 * rho || std::abs(w1) > 3.0 * rho) return std::nullopt;
    PlanarPath tail;
    tail.pieces.push_back(PathPiece::segment(anchor, w1));
    total = arc_integral + time_form_integral(field, tail, 1e-13);
  }
  if (!converged) return std::nullopt;

  NonsemicompleteWitness witness;
  witness.kind = NonsemicompleteWitness::Kind::near_loop_path;
  witness.path.pieces.push_back(arc);
  witness.path.pieces.push_back(PathPiece::segment(anchor, w1));
  witness.time_integral = time_form_integral(field, witness.path, 1e-13);
  witness.endpoint_gap = witness.path.end() - witness.path.start();
  return witness;
}

std::optional<NonsemicompleteWitness> lifted_loop_witness(
    const PairParams& params) {
  const double epsilon = 0.95;
  for (double delta = 0.05; delta > 1e-5; delta *= 0.5) {
    SingularLiftReport lift = lift_singular_chart_loop(
        params, delta, std::nullopt, epsilon, 1e-11);
    if (!lift.stayed_in_V) continue;
    NonsemicompleteWitness witness;
    witness.kind = NonsemicompleteWitness::Kind::lifted_loop;
    witness.delta = delta;
    witness.fiber_displacement = lift.trajectory.final_state()[0] -
                                 lift.trajectory.samples.front().y[0];
    // Time-form integral of Y along the lifted loop, paired through the
    // w-component: int 2 pi i / g(delta^m e^{2 pi i m k}) dk.
    const PairParams canonical =
        lift.axes_swapped ? swap_axes(params) : params;
    const double m = canonical.m;
    witness.time_integral = gauss_legendre_64(
        [&](double k) {
          const Complex zeta =
              std::pow(delta, m) * std::polar(1.0, 2.0 * kPi * m * k);
          return kTwoPiI / canonical.g.eval(zeta);
        },
        0.0, 1.0, 8);
    witness.lift = std::move(lift);
    return witness;
  }
  return std::nullopt;
}

}  // namespace

std::optional<NonsemicompleteWitness> nonsemicomplete_witness(
    const PairParams& params) {
  const ValidationReport validation = validate(params);
  if (!validation.ok) {
    throw std::invalid_argument("nonsemicomplete_witness: invalid params: " +
                                validation.summary());
  }
  if (!is_zero_c(params.g.coeff(0))) return std::nullopt;  // condition 1

  const Complex residue = residue_of_inverse_wg(params.g);
  const int l = params.g.order();
  if (!is_zero_c(residue) || l >= 2) {
    return near_loop_witness(params);
  }
  if (!is_zero_c(params.f.coeff(0))) {
    return lifted_loop_witness(params);
  }
  return std::nullopt;  // condition 2: univalent
}

std::string NonsemicompleteWitness::to_json_string() const {
  std::ostringstream out;
  out.precision(17);
  out << "{\"kind\":\""
      << (kind == Kind::near_loop_path ? "near_loop_path" : "lifted_loop")
      << "\",";
  if (kind == Kind::near_loop_path) {
    out << "\"pieces\":[";
    for (std::size_t i = 0; i < path.pieces.size(); ++i) {
      const PathPiece& piece = path.pieces[i];
      if (i) out << ',';
      if (piece.type == PathPiece::Type::arc) {
        out << "{\"arc\":{\"radius\":" << piece.radius
            << ",\"angle0\":" << piece.angle0 << ",\"angle1\":" << piece.angle1
            << "}}";
      } else {
        out << "{\"segment\":{";
        emit_complex(out, "from", piece.w0);
        out << ',';
        emit_complex(out, "to", piece.w1);
        out << "}}";
      }
    }
    out << "],";
    emit_complex(out, "time_integral", time_integral);
    out << ',';
    emit_complex(out, "endpoint_gap", endpoint_gap);
  } else {
    out << "\"delta\":" << delta << ',';
    emit_complex(out, "fiber_displacement", fiber_displacement);
    out << ',';
    emit_complex(out, "time_integral", time_integral);
    out << ",\"stayed_in_V\":" << (lift.stayed_in_V ? "true" : "false");
  }
  out << '}';
  return out.str();
}

}  // namespace palais
