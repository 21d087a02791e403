#ifndef PALAIS_SEMICOMPLETE_HPP
#define PALAIS_SEMICOMPLETE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "palais/fields.hpp"
#include "palais/lift.hpp"
#include "palais/types.hpp"

namespace palais {

enum class UnivalenceStatus { univalent, not_univalent, outside_classified_family };

const char* to_string(UnivalenceStatus status);

struct CriterionRecord {
  std::string criterion;
  bool passed;
  Complex value;  // the numeric value the criterion consulted
};

struct UnivalenceVerdict {
  UnivalenceStatus status = UnivalenceStatus::outside_classified_family;
  std::string decisive;  // the criterion that settled the verdict
  std::vector<CriterionRecord> reasons;
  std::string to_json_string() const;
};

/// Univalence/semicompleteness decision from the Laurent data:
/// univalent when g(0) != 0, or when g(0) = g''(0) = f0 = 0 with g'(0) != 0;
/// not univalent when the order l of g satisfies l (am-bn) not in {-1,1},
/// when the residue -g''(0)/(2 g'(0)^2) is nonzero, or when f0 != 0.
/// Inputs failing validation are outside the classified family.
UnivalenceVerdict classify_univalence(const PairParams& params);

/// l * (am - bn) in {-1, 1}: the semicompleteness condition of the first
/// nonzero homogeneous component m (x^n y^m)^l [-bx d/dx + ay d/dy].
bool homogeneous_component_test(int a, int b, int m, int n, int l);

/// Data of the projected one-dimensional field Z = w g(w) d/dw on the leaf
/// space of X: order at 0 and residue of dw/(w g(w)).
struct ProjectedFieldZ {
  int order = 0;
  Complex residue{0.0};
};
ProjectedFieldZ projected_field_Z(const PairParams& params);

/// Piecewise path in one complex variable (arcs and straight segments).
struct PathPiece {
  enum class Type { arc, segment };
  Type type = Type::segment;
  Complex center{0.0};
  double radius = 0.0;
  double angle0 = 0.0, angle1 = 0.0;
  Complex w0{0.0}, w1{0.0};

  static PathPiece arc(Complex center, double radius, double angle0,
                       double angle1);
  static PathPiece segment(Complex from, Complex to);
  Complex at(double u) const;        // u in [0,1]
  Complex velocity(double u) const;  // d/du
};

struct PlanarPath {
  std::vector<PathPiece> pieces;
  static PlanarPath polyline(const std::vector<Complex>& points);
  Complex start() const;
  Complex end() const;
};

/// Integral of the time form dT (defined by dT . field = 1) along the path,
/// for a one-dimensional field a(w) d/dw.  Throws when the field vanishes on
/// the path.
Complex time_form_integral(const std::function<Complex(Complex)>& field,
                           const PlanarPath& path, double tol);

/// Two-dimensional variant: the path must be tangent to the field within
/// tangency_tol (relative cross product), checked on a sample grid.
struct ParametrizedPath2 {
  std::function<Vec2c(double)> point;
  std::function<Vec2c(double)> velocity;
};
Complex time_form_integral(
    const std::function<Vec2c(Complex, Complex)>& field,
    const ParametrizedPath2& path, double tol, double tangency_tol = 1e-6);

/// A concrete obstruction to semicompleteness.
struct NonsemicompleteWitness {
  enum class Kind {
    near_loop_path,  // open path in the w-plane with vanishing time integral
    lifted_loop      // loop lifted into a leaf of the Y-foliation
  };
  Kind kind = Kind::near_loop_path;

  // near_loop_path data (field Z = w g(w) d/dw)
  PlanarPath path;
  Complex time_integral{0.0};
  Complex endpoint_gap{0.0};  // end - start; nonzero, the path is open

  // lifted_loop data
  double delta = 0.0;  // the specific loop radius that lifted
  Complex fiber_displacement{0.0};
  SingularLiftReport lift;

  std::string to_json_string() const;
};

/// Witness construction for the non-univalent cases:
///  - nonzero residue (or order of Z >= 3): an open near-loop path in the
///    w-plane whose time-form integral vanishes to 1e-10;
///  - zero residue with f0 != 0: a lifted loop in a leaf of the Y-foliation
///    (open because the holonomy of D is not the identity).
/// Returns nothing for univalent inputs.
std::optional<NonsemicompleteWitness> nonsemicomplete_witness(
    const PairParams& params);

}  // namespace palais

#endif  // PALAIS_SEMICOMPLETE_HPP
