#ifndef PALAIS_MOBIUS_HPP
#define PALAIS_MOBIUS_HPP

#include <span>
#include <string>
#include <utility>

#include "palais/types.hpp"

namespace palais {

/// z -> (alpha z + beta) / (gamma z + delta), normalized to determinant 1.
struct MobiusMap {
  Complex alpha{1.0}, beta{0.0}, gamma{0.0}, delta{1.0};

  Complex apply(Complex z) const {
    return (alpha * z + beta) / (gamma * z + delta);
  }
  Complex det() const { return alpha * delta - beta * gamma; }
  Complex trace() const { return alpha + delta; }

  /// Determinant scaled to 1; overall sign fixed so the first coefficient
  /// of (alpha,beta,gamma,delta) above noise level has nonnegative real
  /// part (positive imaginary part on ties).
  MobiusMap normalized() const;

  static MobiusMap identity() { return {}; }
  static MobiusMap translation(Complex shift) { return {1.0, shift, 0.0, 1.0}; }
};

enum class MobiusClass { identity, translation, parabolic, general };

const char* to_string(MobiusClass c);

MobiusClass classify_mobius(const MobiusMap& map, double tol = 1e-9);

/// Sign-aligned coefficient distance min(|M-N|, |M+N|) (max norm).
double mobius_distance(const MobiusMap& a, const MobiusMap& b);

/// A fitted return map.
struct HolonomyMap {
  MobiusMap mobius;            // normalized
  MobiusClass classification;
  double consistency_error = 0.0;  // from the 4th pair, when supplied

  /// Shift of a translation map (apply(0)).
  Complex translation_shift() const { return mobius.apply(Complex{0.0}); }
  std::string to_json_string() const;
};

/// The unique Moebius map through >= 3 (input, output) pairs.  Inputs must be
/// pairwise distinct (and outputs too); a 4th pair is used as a consistency
/// check and must map within 1e-8.
HolonomyMap fit_return_map(std::span<const std::pair<Complex, Complex>> pairs,
                           double classify_tol = 1e-9);

}  // namespace palais

#endif  // PALAIS_MOBIUS_HPP
