#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "palais/laurent.hpp"

using namespace palais;

namespace {

const Complex kOne{1.0, 0.0};

LaurentSeries random_series(std::mt19937_64& rng, int lowest, int highest) {
  std::uniform_real_distribution<double> lead(0.5, 1.5);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  std::vector<Complex> coeffs;
  coeffs.emplace_back(lead(rng), u(rng));
  for (int p = lowest + 1; p <= highest; ++p) {
    const double re = u(rng);
    const double im = u(rng);
    coeffs.emplace_back(re, im);
  }
  return LaurentSeries(lowest, std::move(coeffs));
}

}  // namespace

TEST_CASE("eval on basic series") {
  CHECK(LaurentSeries::constant(kOne).eval(Complex{5.0, 2.0}) == kOne);
  CHECK(LaurentSeries::monomial(-1, kOne).eval(Complex{2.0, 0.0}) ==
        Complex{0.5, 0.0});
  // f(z) = 1/z + 3z at z = 0.5: direct arithmetic 1/0.5 + 3*0.5
  const LaurentSeries f =
      LaurentSeries::from_terms({{-1, kOne}, {1, 3.0 * kOne}});
  const Complex expected = 1.0 / Complex{0.5, 0.0} + 3.0 * Complex{0.5, 0.0};
  CHECK(std::abs(f.eval(Complex{0.5, 0.0}) - expected) < 1e-15);
  CHECK(expected == Complex{3.5, 0.0});
}

TEST_CASE("eval guards the pole at z = 0") {
  const LaurentSeries f = LaurentSeries::monomial(-2, kOne);
  CHECK_THROWS_AS(f.eval(Complex{0.0, 0.0}), std::domain_error);
  CHECK(LaurentSeries::monomial(2, kOne).eval(Complex{0.0, 0.0}) ==
        Complex{0.0, 0.0});
}

TEST_CASE("coeff reads, inside and outside the retained range") {
  const LaurentSeries f =
      LaurentSeries::from_terms({{-1, 2.0 * kOne}, {0, 5.0 * kOne}});
  CHECK(f.coeff(0) == 5.0 * kOne);
  CHECK(f.coeff(-1) == 2.0 * kOne);
  CHECK(f.coeff(7) == Complex{0.0, 0.0});
}

TEST_CASE("derivative_at_zero") {
  CHECK(LaurentSeries::monomial(1, kOne).derivative_at_zero(1) == kOne);
  const LaurentSeries g =
      LaurentSeries::from_terms({{0, kOne}, {2, 3.0 * kOne}});
  CHECK(g.derivative_at_zero(2) == 6.0 * kOne);
  const LaurentSeries h =
      LaurentSeries::from_terms({{1, kOne}, {3, -kOne}});
  CHECK(h.derivative_at_zero(0) == Complex{0.0, 0.0});
  CHECK_THROWS_AS(LaurentSeries::monomial(-1, kOne).derivative_at_zero(1),
                  std::domain_error);
}

TEST_CASE("derivative_at_zero is exactly k! times the coefficient") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const LaurentSeries s = random_series(rng, 0, 8);
    for (int k = 0; k <= 8; ++k) {
      double factorial = 1.0;
      for (int j = 2; j <= k; ++j) factorial *= j;
      CHECK(s.derivative_at_zero(k) == factorial * s.coeff(k));
    }
  }
}

TEST_CASE("reciprocal of 1 + z is the alternating geometric series") {
  const LaurentSeries g = LaurentSeries::from_terms({{0, kOne}, {1, kOne}});
  const LaurentSeries r = g.reciprocal(3);
  CHECK(r.lowest_index() == 0);
  CHECK(r.coeff(0) == kOne);
  CHECK(r.coeff(1) == -kOne);
  CHECK(r.coeff(2) == kOne);
  CHECK(r.coeff(3) == -kOne);
}

TEST_CASE("reciprocal of a monomial") {
  const LaurentSeries r = LaurentSeries::monomial(1, kOne).reciprocal(2);
  CHECK(r.lowest_index() == -1);
  CHECK(r.coeff(-1) == kOne);
  CHECK(r.coeff(0) == Complex{0.0, 0.0});
}

TEST_CASE("reciprocal of z + z^2/2, checked by multiplying back") {
  const LaurentSeries g =
      LaurentSeries::from_terms({{1, kOne}, {2, 0.5 * kOne}});
  const LaurentSeries r = g.reciprocal(1);
  CHECK(std::abs(r.coeff(-1) - kOne) < 1e-15);
  CHECK(std::abs(r.coeff(0) + 0.5 * kOne) < 1e-15);
  CHECK(std::abs(r.coeff(1) - 0.25 * kOne) < 1e-15);
  // oracle: g * r = 1 + O(z^{2})
  const LaurentSeries product = (g * r).truncated(1);
  CHECK(std::abs(product.coeff(0) - kOne) < 1e-15);
  CHECK(std::abs(product.coeff(1)) < 1e-15);
}

TEST_CASE("reciprocal rejects the zero series") {
  CHECK_THROWS(LaurentSeries::zero().reciprocal(4));
}

TEST_CASE("property: s * reciprocal(s, N) evaluates to 1 on an annulus grid") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> low(-3, 2);
    const int lowest = low(rng);
    const LaurentSeries s = random_series(rng, lowest, lowest + 9);
    const int N = kDefaultTruncation;
    const LaurentSeries product = (s * s.reciprocal(N)).truncated(N);
    for (double mod : {0.1, 0.2, 0.3, 0.4, 0.5}) {
      for (int arm = 0; arm < 4; ++arm) {
        const Complex z = std::polar(mod, arm * 1.5707963267948966);
        CHECK(std::abs(product.eval(z) - kOne) < 1e-12);
      }
    }
  }
}

TEST_CASE("residue of 1/(w g(w)) on the worked examples") {
  CHECK(residue_of_inverse_wg(LaurentSeries::constant(kOne)) == kOne);
  CHECK(residue_of_inverse_wg(LaurentSeries::monomial(1, kOne)) ==
        Complex{0.0, 0.0});
  const LaurentSeries g = LaurentSeries::from_terms({{1, kOne}, {2, kOne}});
  CHECK(std::abs(residue_of_inverse_wg(g) + kOne) < 1e-15);
  // oracle: reciprocal of w g(w), coefficient at -1
  const LaurentSeries wg = g.shifted(1);
  CHECK(std::abs(wg.reciprocal(8).coeff(-1) + kOne) < 1e-15);
}

TEST_CASE("residue closed forms: 1/g(0) for units, -g''(0)/(2 g'(0)^2) else") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const LaurentSeries unit = random_series(rng, 0, 6);
    const Complex res_unit = residue_of_inverse_wg(unit);
    CHECK(std::abs(res_unit - 1.0 / unit.coeff(0)) < 1e-12);

    const LaurentSeries vanishing = unit.shifted(1);  // order 1, g'(0) != 0
    const Complex g1 = vanishing.coeff(1);
    const Complex g2 = 2.0 * vanishing.coeff(2);
    const Complex res = residue_of_inverse_wg(vanishing);
    CHECK(std::abs(res + g2 / (2.0 * g1 * g1)) < 1e-12);
  }
}

TEST_CASE("residue input guards") {
  CHECK_THROWS_AS(residue_of_inverse_wg(LaurentSeries::zero()),
                  std::invalid_argument);
  CHECK_THROWS_AS(residue_of_inverse_wg(LaurentSeries::monomial(-1, kOne)),
                  std::domain_error);
}

TEST_CASE("normalization trims leading zeros and keeps truncation data") {
  const LaurentSeries s(-2, {Complex{0.0}, Complex{0.0}, kOne, 2.0 * kOne});
  CHECK(s.lowest_index() == 0);
  CHECK(s.order() == 0);
  CHECK(s.truncation_degree() == 1);
  CHECK(s.coeff(1) == 2.0 * kOne);
}

TEST_CASE("declared annulus is metadata and eval stays finite on it") {
  std::mt19937_64 rng(17);
  LaurentSeries s = random_series(rng, -2, 10);
  s.declare_annulus(0.05, 2.0);
  CHECK(s.annulus_inner() == 0.05);
  for (double mod : {0.05, 0.3, 1.0, 2.0}) {
    const Complex v = s.eval(std::polar(mod, 0.7));
    CHECK(std::isfinite(v.real()));
    CHECK(std::isfinite(v.imag()));
  }
}
