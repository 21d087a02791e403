#ifndef PALAIS_QUADRATURE_HPP
#define PALAIS_QUADRATURE_HPP

#include <functional>

#include "palais/types.hpp"

namespace palais {

/// Composite Gauss-Legendre rule with 64 nodes per segment.
Complex gauss_legendre_64(const std::function<Complex(double)>& f, double a,
                          double b, int segments = 4);

/// Adaptive Gauss-Kronrod 15(7) to an absolute tolerance.  Throws
/// std::runtime_error if the recursion depth is exhausted before the
/// tolerance is met.
Complex adaptive_quadrature(const std::function<Complex(double)>& f, double a,
                            double b, double abs_tol, int max_depth = 40);

}  // namespace palais

#endif  // PALAIS_QUADRATURE_HPP
