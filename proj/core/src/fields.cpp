#include "palais/fields.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace palais {

namespace {

bool nonzero(Complex c) { return c.real() != 0.0 || c.imag() != 0.0; }

}  // namespace

std::string ValidationReport::summary() const {
  std::ostringstream out;
  out << (ok ? "valid" : "invalid");
  for (const auto& v : violations) out << "; " << v.constraint << ": " << v.detail;
  for (const auto& w : warnings) out << "; warning " << w.constraint << ": " << w.detail;
  return out.str();
}

ValidationReport validate(const PairParams& params) {
  ValidationReport report;
  auto fail = [&](std::string constraint, std::string detail) {
    report.ok = false;
    report.violations.push_back({std::move(constraint), std::move(detail)});
  };

  if (params.m < 1 || params.n < 1) {
    fail("m,n >= 1", "m = " + std::to_string(params.m) +
                         ", n = " + std::to_string(params.n));
  }
  if (params.a < 0 || params.b < 0) {
    fail("a,b >= 0", "a = " + std::to_string(params.a) +
                         ", b = " + std::to_string(params.b));
  }
  const int det = params.det();
  if (det != 1 && det != -1) {
    fail("am - bn in {-1,1}", "am - bn = " + std::to_string(det));
  }
  if (params.g.is_zero()) {
    fail("g != 0", "g is identically zero");
  } else if (params.g.lowest_index() < 0) {
    fail("g holomorphic at 0",
         "g has a pole of order " + std::to_string(-params.g.lowest_index()));
  }

  if (!params.f.is_zero()) {
    int min_total = INT32_MAX;
    for (int p = params.f.lowest_index(); p <= params.f.truncation_degree();
         ++p) {
      if (!nonzero(params.f.coeff(p))) continue;
      const int ex = params.a + params.n * p;
      const int ey = params.b + params.m * p;
      if (ex < 0 || ey < 0) {
        fail("P holomorphic",
             "term p = " + std::to_string(p) + " gives exponents (" +
                 std::to_string(ex) + ", " + std::to_string(ey) + ")");
      } else {
        min_total = std::min(min_total, ex + ey);
      }
    }
    if (min_total != INT32_MAX) {
      report.order_of_P = min_total;
      if (min_total < 1) {
        fail("order of P >= 1", "order " + std::to_string(min_total));
      } else if (min_total == 1) {
        report.warnings.push_back(
            {"order of P >= 2",
             "P has order exactly 1; the linear part of the Y-foliation is "
             "then not -bmx d/dx + amy d/dy"});
      }
    }
  }
  return report;
}

PairParams swap_axes(const PairParams& params) {
  PairParams swapped = params;
  std::swap(swapped.a, swapped.b);
  std::swap(swapped.m, swapped.n);
  return swapped;
}

Complex eval_P(const PairParams& params, Complex x, Complex y) {
  if (params.f.is_zero()) return {};
  Complex acc{0.0};
  for (int p = params.f.lowest_index(); p <= params.f.truncation_degree(); ++p) {
    const Complex fp = params.f.coeff(p);
    if (!nonzero(fp)) continue;
    acc += fp * ipow(x, params.a + params.n * p) *
           ipow(y, params.b + params.m * p);
  }
  return acc;
}

LaurentSeries axis_P_x_zero(const PairParams& params) {
  LaurentSeries out;
  for (int p = params.f.lowest_index(); p <= params.f.truncation_degree(); ++p) {
    if (!nonzero(params.f.coeff(p))) continue;
    if (params.a + params.n * p == 0) {
      out = out + LaurentSeries::monomial(params.b + params.m * p,
                                          params.f.coeff(p));
    }
  }
  return out;
}

LaurentSeries axis_P_y_zero(const PairParams& params) {
  LaurentSeries out;
  for (int p = params.f.lowest_index(); p <= params.f.truncation_degree(); ++p) {
    if (!nonzero(params.f.coeff(p))) continue;
    if (params.b + params.m * p == 0) {
      out = out + LaurentSeries::monomial(params.a + params.n * p,
                                          params.f.coeff(p));
    }
  }
  return out;
}

Vec2c eval_X(const PairParams& params, Complex x, Complex y) {
  const Complex common = ipow(x, params.a) * ipow(y, params.b);
  return {static_cast<double>(params.m) * common * x,
          -static_cast<double>(params.n) * common * y};
}

Vec2c eval_Y(const PairParams& params, Complex x, Complex y) {
  const Complex z = first_integral(params, x, y);
  const Complex gz = params.g.eval(z);
  const Complex P = eval_P(params, x, y);
  const double am = static_cast<double>(params.a) * params.m;
  const double bm = static_cast<double>(params.b) * params.m;
  const double n_over_m = static_cast<double>(params.n) / params.m;
  return {gz * x * (-bm + P), gz * y * (am - n_over_m * P)};
}

Complex first_integral(const PairParams& params, Complex x, Complex y) {
  return ipow(x, params.n) * ipow(y, params.m);
}

double commutator_residual(const PairParams& params, Complex x, Complex y,
                           double h) {
  // Directional central differences: (X.grad)Y at p is approximated by
  // [Y(p + h X(p)) - Y(p - h X(p))] / (2h), and symmetrically for (Y.grad)X.
  const Vec2c X = eval_X(params, x, y);
  const Vec2c Y = eval_Y(params, x, y);
  const Vec2c Yp = eval_Y(params, x + h * X.x, y + h * X.y);
  const Vec2c Ym = eval_Y(params, x - h * X.x, y - h * X.y);
  const Vec2c Xp = eval_X(params, x + h * Y.x, y + h * Y.y);
  const Vec2c Xm = eval_X(params, x - h * Y.x, y - h * Y.y);
  const Complex rx = (Yp.x - Ym.x - Xp.x + Xm.x) / (2.0 * h);
  const Complex ry = (Yp.y - Ym.y - Xp.y + Xm.y) / (2.0 * h);
  return std::sqrt(std::norm(rx) + std::norm(ry));
}

Vec4c eval_Xbar(const PairParams& params, const Vec4c& point) {
  const Vec2c X = eval_X(params, point.x, point.y);
  return {1.0, 0.0, X.x, X.y};
}

Vec4c eval_Ybar(const PairParams& params, const Vec4c& point) {
  const Vec2c Y = eval_Y(params, point.x, point.y);
  return {0.0, 1.0, Y.x, Y.y};
}

Vec2c chart_field_Yprime(const PairParams& params, Complex z, Complex w) {
  if (w == Complex{0.0} && params.f.lowest_index() < 0) {
    throw std::domain_error("chart_field_Yprime: f has a pole at w = 0");
  }
  const Complex fw = params.f.is_zero() ? Complex{0.0} : params.f.eval(w);
  return {-z * (1.0 + w * z * fw / static_cast<double>(params.m)), -w};
}

bool SingularChartDomain::contains(Complex z, Complex w) const {
  const double az = std::abs(z);
  if (az <= 0.0) return false;
  if (az >= std::pow(epsilon, 1.0 / m)) return false;
  return az > std::pow(std::abs(w) / epsilon, 1.0 / n);
}

Vec2c singular_chart_map(const PairParams& params, Complex z, Complex w) {
  return {ipow(z, params.m), w / ipow(z, params.n)};
}

std::pair<Vec2c, Vec2c> singular_chart_fields(const PairParams& params,
                                              Complex z, Complex w,
                                              double epsilon) {
  const SingularChartDomain domain{epsilon, params.m, params.n};
  if (!domain.contains(z, w)) {
    throw std::domain_error("singular_chart_fields: (z,w) outside V");
  }
  const int e = params.det();
  // S(w) = w^b f(w^m), expanded termwise (holomorphic since b >= m * pole order).
  Complex S{0.0};
  for (int p = params.f.lowest_index(); p <= params.f.truncation_degree(); ++p) {
    const Complex fp = params.f.coeff(p);
    if (!nonzero(fp)) continue;
    S += fp * ipow(w, params.b + params.m * p);
  }
  const Complex ze = (e == 1) ? z : 1.0 / z;
  const Complex gwm = params.g.eval(ipow(w, params.m));
  const Vec2c chi{ipow(z, 1 + e) * ipow(w, params.b), 0.0};
  const Vec2c upsilon{
      gwm * z * (-static_cast<double>(params.b) +
                 ze * S / static_cast<double>(params.m)),
      gwm * static_cast<double>(e) * w};
  return {chi, upsilon};
}

Vec4c aux_field_Wbar(const PairParams& params, const Vec4c& point) {
  const Complex z = first_integral(params, point.x, point.y);
  if (z == Complex{0.0} && params.f.lowest_index() < 0) {
    throw std::domain_error("aux_field_Wbar: f has a pole on x y = 0");
  }
  const Complex fz = params.f.is_zero() ? Complex{0.0} : params.f.eval(z);
  const Complex gz = params.g.eval(z);
  const Complex coef = gz * fz / static_cast<double>(params.m);
  const Vec4c Xbar = eval_Xbar(params, point);
  const Vec4c Ybar = eval_Ybar(params, point);
  return {coef * Xbar.t - Ybar.t, coef * Xbar.s - Ybar.s,
          coef * Xbar.x - Ybar.x, coef * Xbar.y - Ybar.y};
}

Vec4c aux_field_Zbar(const PairParams& params, const Vec4c& point) {
  const Complex z = first_integral(params, point.x, point.y);
  const Complex gz = params.g.eval(z);
  const Complex P = eval_P(params, point.x, point.y);
  const Complex xays = ipow(point.x, params.a) * ipow(point.y, params.b);
  const double bm = static_cast<double>(params.b) * params.m;
  // The d/dx component cancels identically; the d/dy component collapses to
  // -m (am - bn) g x^a y^{b+1}.
  return {gz * (-bm + P), -static_cast<double>(params.m) * xays, 0.0,
          -static_cast<double>(params.m * params.det()) * gz * xays * point.y};
}

}  // namespace palais
