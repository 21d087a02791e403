#ifndef PALAIS_TYPES_HPP
#define PALAIS_TYPES_HPP

#include <cmath>
#include <complex>

namespace palais {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// 2*pi*i, the period factor that shows up in every loop integral.
inline const Complex kTwoPiI{0.0, 2.0 * kPi};

/// Tangent vector on (x,y)-space.
struct Vec2c {
  Complex x{0.0};
  Complex y{0.0};
};

/// Tangent vector on the suspended (t,s,x,y)-space.
struct Vec4c {
  Complex t{0.0};
  Complex s{0.0};
  Complex x{0.0};
  Complex y{0.0};
};

inline double norm2(const Vec2c& v) {
  return std::sqrt(std::norm(v.x) + std::norm(v.y));
}

inline double norm2(const Vec4c& v) {
  return std::sqrt(std::norm(v.t) + std::norm(v.s) + std::norm(v.x) +
                   std::norm(v.y));
}

/// z^k for integer k >= 0 by repeated squaring; ipow(0,0) == 1.
inline Complex ipow(Complex z, int k) {
  Complex result{1.0};
  Complex base = z;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

}  // namespace palais

#endif  // PALAIS_TYPES_HPP
