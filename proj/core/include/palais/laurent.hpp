#ifndef PALAIS_LAURENT_HPP
#define PALAIS_LAURENT_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "palais/types.hpp"

namespace palais {

/// Truncated Laurent series sum_{p = lowest..trunc} c_p z^p.
///
/// The coefficient at lowest_index() is nonzero unless the series is
/// identically zero (leading zeros are trimmed on construction, trailing
/// zeros are kept as retained truncation data).  The validity annulus is
/// caller-declared metadata; evaluation only guards the z = 0 pole.
class LaurentSeries {
 public:
  /// The identically-zero series.
  LaurentSeries() = default;

  /// Series with coefficients at indices lowest, lowest+1, ...
  LaurentSeries(int lowest_index, std::vector<Complex> coefficients);

  static LaurentSeries zero() { return LaurentSeries(); }
  static LaurentSeries constant(Complex c);
  /// c * z^k
  static LaurentSeries monomial(int k, Complex c = Complex{1.0});
  /// Sparse construction from (index, coefficient) pairs.
  static LaurentSeries from_terms(
      std::initializer_list<std::pair<int, Complex>> terms);

  bool is_zero() const { return coeffs_.empty(); }
  /// Index of the leading (nonzero) coefficient; 0 for the zero series.
  int lowest_index() const { return lowest_; }
  /// Highest retained index.
  int truncation_degree() const;
  /// Order of vanishing at 0 (= lowest_index by the leading-term invariant).
  int order() const { return lowest_; }

  /// Coefficient at index p; zero outside the retained range.
  Complex coeff(int p) const;

  /// sum c_p z^p over retained indices.  Throws std::domain_error when
  /// z == 0 and the series has a pole.
  Complex eval(Complex z) const;

  /// k-th derivative at 0, i.e. k! * coeff(k).  Requires lowest_index >= 0.
  Complex derivative_at_zero(int k) const;

  /// Series r with (*this) * r = 1 + O(z^{out_truncation+1}).  The lowest
  /// index of r is -order().  Throws on the zero series.
  LaurentSeries reciprocal(int out_truncation) const;

  /// Termwise derivative d/dz.
  LaurentSeries derivative() const;

  /// Copy with retained indices limited to <= new_truncation.
  LaurentSeries truncated(int new_truncation) const;

  /// Multiply by z^k.
  LaurentSeries shifted(int k) const;

  int term_count() const { return static_cast<int>(coeffs_.size()); }

  // Caller-declared validity annulus (metadata only).
  double annulus_inner() const { return annulus_inner_; }
  double annulus_outer() const { return annulus_outer_; }
  void declare_annulus(double inner, double outer);

  friend LaurentSeries operator+(const LaurentSeries& a,
                                 const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a,
                                 const LaurentSeries& b);

  bool operator==(const LaurentSeries& other) const;

 private:
  void normalize();

  int lowest_ = 0;
  std::vector<Complex> coeffs_;  // indices lowest_ .. lowest_+size-1
  double annulus_inner_ = 0.0;
  double annulus_outer_ = 1e300;
};

/// Default retained truncation degree for derived series.
inline constexpr int kDefaultTruncation = 32;

/// Coefficient of w^{-1} in the Laurent expansion of 1/(w g(w)).
/// Equals 1/g(0) when g(0) != 0 and -g''(0) / (2 g'(0)^2) when g vanishes
/// simply at 0.  Requires g holomorphic at 0 and not identically zero.
Complex residue_of_inverse_wg(const LaurentSeries& g);

}  // namespace palais

#endif  // PALAIS_LAURENT_HPP
