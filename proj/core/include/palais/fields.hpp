#ifndef PALAIS_FIELDS_HPP
#define PALAIS_FIELDS_HPP

#include <string>
#include <vector>

#include "palais/laurent.hpp"
#include "palais/types.hpp"

namespace palais {

/// Parameters of the commuting pair
///   X = x^a y^b [ m x d/dx - n y d/dy ]
///   Y = g(x^n y^m) [ x(-bm + P) d/dx + y(am - (n/m) P) d/dy ],
/// where P(x,y) = x^a y^b f(x^n y^m).  g is holomorphic at 0; f may be
/// meromorphic, constrained so that P is holomorphic at the origin.
struct PairParams {
  int a = 1;
  int b = 1;
  int m = 1;
  int n = 1;
  LaurentSeries f;  // may carry a pole at 0
  LaurentSeries g = LaurentSeries::constant(1.0);

  int det() const { return a * m - b * n; }  // in {-1, 1} for valid params
};

struct ValidationIssue {
  std::string constraint;
  std::string detail;
};

struct ValidationReport {
  bool ok = true;                          // no violations
  std::vector<ValidationIssue> violations;
  std::vector<ValidationIssue> warnings;   // e.g. P of exact order 1
  int order_of_P = -1;                     // min total degree of P; -1 when f == 0

  std::string summary() const;
};

/// Checks m,n >= 1, a,b >= 0, am - bn in {-1,1}, g holomorphic and nonzero,
/// and that every retained term of P = sum f_p x^{a+np} y^{b+mp} has
/// nonnegative exponents.  P of exact order 1 is reported as a warning, not
/// rejected.
ValidationReport validate(const PairParams& params);

/// Swap the roles of x and y: (a,b,m,n) -> (b,a,n,m).  Flips the sign of
/// am - bn and preserves the first integral x^n y^m.
PairParams swap_axes(const PairParams& params);

/// P(x,y) = x^a y^b f(x^n y^m), evaluated termwise as
/// sum f_p x^{a+np} y^{b+mp}; finite everywhere for validated params.
Complex eval_P(const PairParams& params, Complex x, Complex y);

/// Restriction of P to the axis {x=0} as a series in y (only terms with
/// a + n p = 0 survive); empty unless f has the matching pole order.
LaurentSeries axis_P_x_zero(const PairParams& params);
/// Restriction of P to {y=0} as a series in x.
LaurentSeries axis_P_y_zero(const PairParams& params);

Vec2c eval_X(const PairParams& params, Complex x, Complex y);
Vec2c eval_Y(const PairParams& params, Complex x, Complex y);

/// First integral x^n y^m of X.
Complex first_integral(const PairParams& params, Complex x, Complex y);

/// || (X.grad)Y - (Y.grad)X || estimated with central differences of step h.
double commutator_residual(const PairParams& params, Complex x, Complex y,
                           double h);

/// Suspended fields on (t,s,x,y)-space: Xbar = d/dt + X, Ybar = d/ds + Y.
Vec4c eval_Xbar(const PairParams& params, const Vec4c& point);
Vec4c eval_Ybar(const PairParams& params, const Vec4c& point);

/// Blow-up chart field Y' = -z(1 + w z f(w)/m) d/dz - w d/dw.  Throws when
/// w == 0 and f has a pole.
Vec2c chart_field_Yprime(const PairParams& params, Complex z, Complex w);

/// Domain V of the singular chart H(z,w) = (z^m, w/z^n):
/// 0 < |z| < eps^{1/m} and |z| > (|w|/eps)^{1/n}.
struct SingularChartDomain {
  double epsilon = 0.5;
  int m = 1;
  int n = 1;
  bool contains(Complex z, Complex w) const;
};

/// The pair (X, Y) written in the singular chart:
///   X -> ( z^{1+e} w^b, 0 ),
///   Y -> g(w^m) ( z(-b + z^e S(w)/m), e w ),
/// with e = am - bn and S(w) = w^b f(w^m) expanded termwise.  Throws a
/// domain error outside V.
std::pair<Vec2c, Vec2c> singular_chart_fields(const PairParams& params,
                                              Complex z, Complex w,
                                              double epsilon = 0.5);

/// Image of the singular chart, H(z,w) = (z^m, w/z^n).
Vec2c singular_chart_map(const PairParams& params, Complex z, Complex w);

/// Wbar = (g f / m) Xbar - Ybar; tangent to the suspended foliation.
/// Throws when f has a pole and x^n y^m = 0.
Vec4c aux_field_Wbar(const PairParams& params, const Vec4c& point);

/// Zbar = g(-bm + P) Xbar - m x^a y^b Ybar; its d/dx component vanishes
/// identically and it leaves {x = 1} invariant.
Vec4c aux_field_Zbar(const PairParams& params, const Vec4c& point);

}  // namespace palais

#endif  // PALAIS_FIELDS_HPP
