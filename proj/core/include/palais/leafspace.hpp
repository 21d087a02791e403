#ifndef PALAIS_LEAFSPACE_HPP
#define PALAIS_LEAFSPACE_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "palais/fields.hpp"
#include "palais/integrator.hpp"
#include "palais/lift.hpp"
#include "palais/types.hpp"

namespace palais {

enum class LeafModel { point, plane, punctured_disc, cylinder, quotient_c2 };

const char* to_string(LeafModel model);

/// Model selectors for the axis strata (the classification table rows):
/// S_y is a plane when a = 0, a punctured disc when g(0) = 0, and otherwise
/// the cylinder C / <s -> s + 2 pi i/(a m g(0))>; symmetrically for S_x.
LeafModel stratum_model_Sy(int a, bool g0_is_zero);
LeafModel stratum_model_Sx(int b, bool g0_is_zero);

struct NamedCheck {
  std::string name;
  bool passed = false;
  double value = 0.0;  // deviation or margin consulted
};

struct StratumEntry {
  std::string stratum;      // "S0", "Sx", "Sy", "Sxy"
  LeafModel model;
  std::string model_detail;
  std::string condition;    // which table row applied
  bool has_monodromy = false;
  TranslationPair closed_form;  // generator (dt, ds)
  TranslationPair numeric;
  std::string fitted_class;     // classification of the fitted return map
  double agreement_error = 0.0;
  bool verified = false;
  std::vector<NamedCheck> checks;
};

struct LeafSpaceReport {
  std::vector<StratumEntry> strata;
  std::vector<NamedCheck> separation_checks;
  bool hausdorff = false;
  Complex g0{0.0};           // recorded normalization data
  bool g0_nonzero = false;

  bool all_verified() const;
  std::string to_json_string() const;
  std::string to_table() const;
};

/// Assembles the per-stratum leaf-space classification with closed-form vs
/// numerically lifted monodromy on every stratum that has one, plus the
/// separation checks behind the global Hausdorff verdict.
LeafSpaceReport table1_report(const PairParams& params, double tol);

/// Chordal distance between [a0:a1] and [b0:b1] on the projective line.
double chordal_distance(Complex a0, Complex a1, Complex b0, Complex b1);

/// Integrates d/dt + x^2 d/dx from each (t,x) sample over the given span and
/// returns the maximal chordal movement of pi(t,x) = [x : t x + 1], which is
/// a first integral into the projective line.
double cp1_leaf_map_check(std::span<const std::pair<Complex, Complex>> samples,
                          double span, double tol);

/// Real planar field 4y d/dx - x d/dy with first integral H = x^2 + 4 y^2,
/// suspended as d/dt + X.  The two run modes witness how the leaf space of
/// the suspension depends on the chosen neighborhood of the origin.
struct Prop26Connection {
  double delta = 0.0;
  bool found = false;
  double t_star = 0.0;        // flow time connecting (0, e/2-d) to (0, -e/2+d)
  double endpoint_error = 0.0;
  double h_drift = 0.0;       // max |H - H(start)| along the trajectory
  double max_radius_sq = 0.0; // max x^2+y^2 (stays < epsilon^2)
  Trajectory trajectory;
};

struct Prop26Witness {
  bool u1_mode = false;
  double epsilon = 0.0;
  bool hausdorff = false;
  std::vector<Prop26Connection> connections;  // ball mode: merging-pair data
  double max_h_drift = 0.0;                   // invariant-ellipse mode
  std::string to_json_string() const;
};

/// Ball mode (U2): for each delta the trajectory from (t,x,y) = (0,0,e/2-d)
/// reaches (T*, 0, -e/2+d); the family exhibits the pair of leaves that
/// cannot be separated in the leaf space.  Requires 0 < delta < epsilon/4.
Prop26Witness prop26_witness(double epsilon, std::span<const double> deltas,
                             double tol);

/// Invariant-ellipse mode (U1): H is conserved along suspended trajectories
/// and the leaf space is the Hausdorff interval of H-values.
Prop26Witness prop26_hausdorff_check(double epsilon, double tol);

/// Leaf coordinate on the S_y stratum: the class of s - Log(y)/(a m g(0))
/// modulo the deck translation 2 pi i/(a m g(0)).  mu is the real part and
/// nu the imaginary part of the reduced representative; two points on one
/// leaf agree in both.
struct SeparationCoordinate {
  double mu = 0.0;
  double nu = 0.0;
  Complex lattice{0.0};  // deck translation generator
};

SeparationCoordinate separation_coordinate_Sy(const PairParams& params,
                                              Complex s, Complex y);

/// Distance between coordinate classes (minimized over lattice shifts).
double separation_distance(const SeparationCoordinate& a,
                           const SeparationCoordinate& b);

struct SeparationVerdict {
  bool separated = false;
  double threshold_re_s = 0.0;  // boundary of the shielding half-space
};

/// The half-space construction separating two S_y leaves at a common fiber:
/// leaves whose mu-coordinates differ by more than 1 are split by
/// {Re(s) < threshold} / {Re(s) > threshold}.
SeparationVerdict sy_separation_threshold(const PairParams& params, Complex s1,
                                          Complex y1, Complex s2, Complex y2);

/// Flow maps of the pair, by numerical integration over unit parameter time.
Vec2c flow_X(const PairParams& params, Complex time, Vec2c p, double tol);
Vec2c flow_Y(const PairParams& params, Complex time, Vec2c p, double tol);

/// Distance between Phi_X^{t1} Phi_Y^{s1} Phi_X^{t2} Phi_Y^{s2}(p) and
/// Phi_X^{t1+t2} Phi_Y^{s1+s2}(p): the abelian group law of the local
/// action, which vanishes because the flows commute.
double local_action_check(const PairParams& params, Complex t1, Complex s1,
                          Complex t2, Complex s2, Vec2c p, double tol);

}  // namespace palais

#endif  // PALAIS_LEAFSPACE_HPP
