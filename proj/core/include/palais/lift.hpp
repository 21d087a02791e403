#ifndef PALAIS_LIFT_HPP
#define PALAIS_LIFT_HPP

#include <optional>
#include <vector>

#include "palais/fields.hpp"
#include "palais/integrator.hpp"
#include "palais/mobius.hpp"
#include "palais/types.hpp"

namespace palais {

/// Closed loop in the base, parametrized over k in [0,1].
/// sigma1(k) = r (e^{2 pi i m k}, e^{-2 pi i n k}) is tangent to X;
/// sigma2(k) = r (e^{-2 pi i b k}, e^{2 pi i a k}).  circle loops live in the
/// first coordinate; custom loops interpolate a closed sample list linearly.
class BaseLoop {
 public:
  enum class Kind { sigma1, sigma2, circle, custom };

  static BaseLoop sigma1(const PairParams& params, double radius = 1.0);
  static BaseLoop sigma2(const PairParams& params, double radius = 1.0);
  static BaseLoop circle(Complex center, double radius, int winding = 1);
  static BaseLoop custom(std::vector<Vec2c> samples);

  Kind kind() const { return kind_; }
  Vec2c at(double k) const;
  Vec2c velocity(double k) const;
  bool is_closed(double tol = 1e-9) const;

 private:
  BaseLoop(Kind kind) : kind_(kind) {}
  Kind kind_;
  // sigma/circle data
  double radius_ = 1.0;
  int wx_ = 0, wy_ = 0;   // winding exponents of each coordinate
  Complex center_{0.0};
  // custom data
  std::vector<Vec2c> samples_;
};

/// Endpoint of a fiber lift over a base loop, with the integrated path.
struct LoopLift {
  Complex t{0.0};
  Complex s{0.0};
  Trajectory trajectory;   // state (t, s)
  double radius_used = 1.0;
};

/// Lift of sigma1 along Xbar; s is constant and the endpoint returns to the
/// start (the monodromy is the identity).
LoopLift monodromy_sigma1(const PairParams& params, Complex t0, Complex s0,
                          double tol, double radius = 1.0);

/// Lift of sigma2 along the suspended foliation: (dt/dk, ds/dk) solve the
/// 2x2 tangency system against (Xbar, Ybar).  The loop radius is shrunk
/// automatically when g vanishes on or inside the requested circle.
LoopLift monodromy_sigma2(const PairParams& params, Complex t0, Complex s0,
                          double tol, double radius = 1.0);

struct TranslationPair {
  Complex dt{0.0};
  Complex ds{0.0};
};

/// (-2 pi i f0 / m^2, 2 pi i g0 / m) with f0 = coeff(f,0) and g0 the zeroth
/// Laurent coefficient of 1/g.
TranslationPair sigma2_closed_form(const PairParams& params);

/// Independent oracle: composite Gauss-Legendre quadrature of the explicit
/// integrands dt/dk = -2 pi i f(z(k))/m^2, ds/dk = 2 pi i/(m g(z(k))).
TranslationPair sigma2_quadrature(const PairParams& params,
                                  double radius = 1.0);

/// Largest radius <= hint (by halving) such that s has no zero with
/// 0 < |z| <= radius, decided by a winding-number count on the circle.
/// A zero at the origin itself does not count.
double zero_free_loop_radius(const LaurentSeries& s, double hint);

/// zero_free_loop_radius applied to g.
double sigma2_safe_radius(const PairParams& params, double hint = 1.0);

/// Fiber monodromy of the y-axis stratum: lifts y(k) = r e^{2 pi i k} along
/// Ybar restricted to {x=0} and returns the endpoint of s.  Requires a >= 1
/// and g(0) != 0 (otherwise the leaf space has no monodromy map).
Complex monodromy_Sy(const PairParams& params, Complex s0, double tol,
                     double radius = 1.0);
Complex monodromy_Sy_shift_closed_form(const PairParams& params);

Complex monodromy_Sx(const PairParams& params, Complex s0, double tol,
                     double radius = 1.0);
Complex monodromy_Sx_shift_closed_form(const PairParams& params);

/// Holonomy of the invariant curve D = {z=0} in the blow-up chart: the lift
/// of w(k) = r e^{2 pi i k} under dz/dk = -2 pi i z (1 + w z f(w)/m).
struct HolonomyOfD {
  Complex endpoint{0.0};            // z(1) from the RK lift
  Complex closed_form_with_m{0.0};  // z0 / (1 + 2 pi i r f0 z0 / m)
  Complex closed_form_without_m{0.0};
  Complex quadrature{0.0};          // exact Riccati form with quadrature mean
  std::string matched;              // which closed form the lift agrees with
  Trajectory trajectory;
};
HolonomyOfD holonomy_of_D(const PairParams& params, Complex z0,
                          double loop_radius, double tol);

/// Lifting-lemma experiment in the singular chart: lifts the loop
/// w(k) = delta e^{2 pi i k} and reports the empirical constant beta of the
/// estimate |c(k) - c(0)| <= beta |c(0)|^2 k, c(k) = z(k) e^{2 pi i b k}.
/// Inputs with am - bn = -1 are canonicalized by swapping the axes.
struct SingularLiftReport {
  Trajectory trajectory;     // state (z)
  bool stayed_in_V = false;
  double beta_empirical = 0.0;
  double sup_delta_b_f = 0.0;  // sup_k delta^b |f(delta^m e^{2 pi i m k})|
  double delta = 0.0;
  double z0_abs = 0.0;
  double tau = 0.0;
  bool axes_swapped = false;
};
SingularLiftReport lift_singular_chart_loop(const PairParams& params,
                                            double delta,
                                            std::optional<Complex> z0,
                                            double epsilon, double tol,
                                            double tau = 0.1);

}  // namespace palais

#endif  // PALAIS_LIFT_HPP
