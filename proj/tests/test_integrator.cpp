#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "palais/integrator.hpp"

using namespace palais;

namespace {

const OdeRhs kZeroRhs = [](double, const OdeState&, OdeState& dy) {
  dy[0] = Complex{0.0};
};

const OdeRhs kExponential = [](double, const OdeState& y, OdeState& dy) {
  dy[0] = kTwoPiI * y[0];
};

// y' = -2 pi i y^2 with exact solution y(k) = y0 / (1 + 2 pi i y0 k).
const OdeRhs kRiccati = [](double, const OdeState& y, OdeState& dy) {
  dy[0] = -kTwoPiI * y[0] * y[0];
};

Complex riccati_exact(Complex y0, double k) {
  return y0 / (1.0 + kTwoPiI * y0 * k);
}

}  // namespace

TEST_CASE("zero field keeps the state constant") {
  IntegrateOptions options;
  options.tol = 1e-10;
  const Trajectory traj = integrate(kZeroRhs, {Complex{0.3, -0.7}}, options);
  CHECK(traj.status == OdeStatus::completed);
  CHECK(traj.final_k() == 1.0);
  CHECK(traj.final_state()[0] == Complex{0.3, -0.7});
}

TEST_CASE("exponential loop returns to the start") {
  IntegrateOptions options;
  options.tol = 1e-10;
  const Trajectory traj = integrate(kExponential, {Complex{1.0, 0.0}}, options);
  CHECK(traj.status == OdeStatus::completed);
  CHECK(std::abs(traj.final_state()[0] - Complex{1.0, 0.0}) < 1e-9);
}

TEST_CASE("Riccati endpoint against the exact solution") {
  IntegrateOptions options;
  options.tol = 1e-11;
  const Complex y0{0.1, 0.0};
  const Trajectory traj = integrate(kRiccati, {y0}, options);
  CHECK(traj.status == OdeStatus::completed);
  CHECK(std::abs(traj.final_state()[0] - riccati_exact(y0, 1.0)) < 1e-10);
}

TEST_CASE("tolerance domain is enforced") {
  IntegrateOptions options;
  options.tol = 1e-5;
  CHECK_THROWS_AS(integrate(kZeroRhs, {Complex{0.0}}, options),
                  std::invalid_argument);
  options.tol = 1e-14;
  CHECK_THROWS_AS(integrate(kZeroRhs, {Complex{0.0}}, options),
                  std::invalid_argument);
}

TEST_CASE("escape region stops the trajectory with status escaped") {
  const OdeRhs growth = [](double, const OdeState& y, OdeState& dy) {
    dy[0] = 5.0 * y[0];
  };
  IntegrateOptions options;
  options.tol = 1e-10;
  options.admissible = [](double, const OdeState& y) {
    return std::abs(y[0]) < 2.0;
  };
  const Trajectory traj = integrate(growth, {Complex{1.0, 0.0}}, options);
  CHECK(traj.status == OdeStatus::escaped);
  CHECK(traj.final_k() < 1.0);
}

TEST_CASE("finite-time blow-up drives the step size under the floor") {
  const OdeRhs blowup = [](double, const OdeState& y, OdeState& dy) {
    dy[0] = y[0] * y[0];
  };
  IntegrateOptions options;
  options.tol = 1e-10;
  options.k_end = 2.0;  // the solution 1/(1-k) blows up inside the range
  const Trajectory traj = integrate(blowup, {Complex{1.0, 0.0}}, options);
  CHECK(traj.status == OdeStatus::step_underflow);
  CHECK(traj.final_k() < 1.001);
}

TEST_CASE("samples are strictly increasing in k and carry local errors") {
  IntegrateOptions options;
  options.tol = 1e-10;
  const Trajectory traj = integrate(kRiccati, {Complex{0.1, 0.0}}, options);
  REQUIRE(traj.samples.size() >= 2);
  CHECK(traj.samples.front().k == 0.0);
  for (std::size_t i = 1; i < traj.samples.size(); ++i) {
    CHECK(traj.samples[i].k > traj.samples[i - 1].k);
    CHECK(traj.samples[i].local_error >= 0.0);
  }
  CHECK(traj.error_estimate >= 0.0);
}

TEST_CASE("fixed-step runs at fifth order: halving h cuts the error 16x+") {
  double prev_err = -1.0;
  for (int n = 16; n <= 256; n *= 2) {
    const OdeState yn =
        integrate_fixed_step(kExponential, {Complex{1.0, 0.0}}, 0.0, 1.0, n);
    const double err = std::abs(yn[0] - Complex{1.0, 0.0});
    if (prev_err > 0.0) CHECK(prev_err / err >= 16.0);
    prev_err = err;
  }
}

TEST_CASE("observed order >= 4.5 on the exponential and Riccati problems") {
  const auto order_of = [](const OdeRhs& rhs, Complex y0, Complex exact) {
    double sh = 0, se = 0, shh = 0, she = 0, count = 0;
    for (int n = 16; n <= 512; n *= 2) {
      const OdeState yn = integrate_fixed_step(rhs, {y0}, 0.0, 1.0, n);
      const double lh = std::log(1.0 / n);
      const double le = std::log(std::abs(yn[0] - exact));
      sh += lh;
      se += le;
      shh += lh * lh;
      she += lh * le;
      count += 1.0;
    }
    return (count * she - sh * se) / (count * shh - sh * sh);
  };
  CHECK(order_of(kExponential, Complex{1.0, 0.0}, Complex{1.0, 0.0}) >= 4.5);
  CHECK(order_of(kRiccati, Complex{0.1, 0.0},
                 riccati_exact(Complex{0.1, 0.0}, 1.0)) >= 4.5);
}

TEST_CASE("tightening the tolerance tightens the endpoint error") {
  const auto endpoint_error = [](double tol) {
    IntegrateOptions options;
    options.tol = tol;
    const Trajectory traj = integrate(kRiccati, {Complex{0.1, 0.0}}, options);
    return std::abs(traj.final_state()[0] -
                    riccati_exact(Complex{0.1, 0.0}, 1.0));
  };
  const double loose = endpoint_error(1e-7);
  const double tight = endpoint_error(1e-12);
  CHECK(tight < loose);
  CHECK(tight < 1e-11);
}

TEST_CASE("CSV export has the stable header and one row per sample") {
  IntegrateOptions options;
  options.tol = 1e-8;
  const Trajectory traj =
      integrate(kZeroRhs, {Complex{1.0, 2.0}}, options);
  const std::string csv = traj.to_csv();
  CHECK(csv.rfind("k,re0,im0,local_error\n", 0) == 0);
  std::size_t rows = 0;
  for (char c : csv) rows += (c == '\n');
  CHECK(rows == traj.samples.size() + 1);
  const std::string json = traj.to_json_string();
  CHECK(json.find("\"status\":\"completed\"") != std::string::npos);
}
