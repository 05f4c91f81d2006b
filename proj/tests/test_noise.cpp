#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "vlcrange/error.hpp"
#include "vlcrange/noise.hpp"

using namespace vlcrange;
using vlcrange::testing::central_difference;
using vlcrange::testing::relative_error;

// 40-digit substitutions of the default parameters.
constexpr double kThermal = 1.120718894165235338149e-13;
constexpr double kBackground = 2.37568e-14;
constexpr double kDark = 6.4e-22;
constexpr double kFloor = 1.358286900565235338149e-13;

TEST_CASE("noise floor components for the default link") {
  const auto p = default_parameters();
  CHECK(relative_error(thermal_variance(p), kThermal) < 1e-13);
  CHECK(relative_error(background_variance(p), kBackground) < 1e-13);
  CHECK(relative_error(dark_current_variance(p), kDark) < 1e-13);
  CHECK(relative_error(noise_floor_variance(p), kFloor) < 1e-13);

  // Three-figure reference values.
  CHECK(relative_error(thermal_variance(p), 1.12e-13) < 0.01);
  CHECK(relative_error(background_variance(p), 2.38e-14) < 0.01);
  CHECK(relative_error(dark_current_variance(p), 6.40e-22) < 0.01);
  CHECK(relative_error(noise_floor_variance(p), 1.36e-13) < 0.01);
}

TEST_CASE("noise components: limiting and scaling cases") {
  auto p = default_parameters();
  auto no_bw = p;
  no_bw.B = 0.0;
  CHECK(thermal_variance(no_bw) == 0.0);

  auto no_bg = p;
  no_bg.p_BS = 0.0;
  CHECK(background_variance(no_bg) == 0.0);

  auto big = p;
  big.S *= 2.0;
  CHECK(background_variance(big) == 2.0 * background_variance(p));

  auto no_dark = p;
  no_dark.I_DC = 0.0;
  CHECK(dark_current_variance(no_dark) == 0.0);

  auto bright = p;
  bright.P_t = 100.0;
  CHECK(thermal_variance(bright) == thermal_variance(p));

  CHECK(shot_variance(p, 0.0) == 0.0);
  CHECK(relative_error(shot_variance(p, 6.3662e-7), 8.148736e-17) < 1e-13);
  CHECK(shot_variance(p, 2e-6) == doctest::Approx(2.0 * shot_variance(p, 1e-6)).epsilon(1e-15));
  auto wide = p;
  wide.B *= 3.0;
  CHECK(shot_variance(wide, 1e-6) == doctest::Approx(3.0 * shot_variance(p, 1e-6)).epsilon(1e-15));
  CHECK_THROWS_AS(shot_variance(p, -1e-9), DomainError);
}

TEST_CASE("total_noise") {
  auto p = default_parameters();
  auto dark = p;
  dark.P_t = 0.0;
  const auto n0 = total_noise(dark, Geometry(2.0, 1.0));
  CHECK(n0.var_shot == 0.0);
  CHECK(n0.var_total == n0.var_floor);
  CHECK(relative_error(n0.var_total, 1.36e-13) < 0.01);

  const auto n = total_noise(p, Geometry(2.0, 0.0));
  CHECK(n.var_total == n.var_floor + n.var_shot);
  CHECK(n.var_floor == n.var_thermal + n.var_background + n.var_dark);
  CHECK(n.var_total >= n.var_floor);

  auto diffuse = p;
  diffuse.P_diff = 1e-6;
  CHECK(total_noise(diffuse, Geometry(2.0, 0.0)).var_shot ==
        shot_variance(diffuse, received_los_power(diffuse, Geometry(2.0, 0.0)) + 1e-6));

  for (double h : {1.0, 2.0, 3.0}) {
    double prev_shot = total_noise(p, Geometry(h, 0.0)).var_shot;
    double prev_total = total_noise(p, Geometry(h, 0.0)).var_total;
    for (int i = 1; i <= 20; ++i) {
      const auto next = total_noise(p, Geometry(h, 0.1 * i));
      CHECK(next.var_shot < prev_shot);
      CHECK(next.var_total <= prev_total);
      prev_shot = next.var_shot;
      prev_total = next.var_total;
    }
  }
}

TEST_CASE("dsigma0_dd") {
  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 100) {
    auto c = vlcrange::testing::random_config(rng);
    c.p.P_t *= 100.0;  // make the shot term visible in the difference quotient
    const Geometry g(c.h, c.ell);
    const double d = g.d();
    const auto var = [&](double dist) {
      return noise_at_power(c.p, received_los_power_at(c.p, c.h, dist) + c.p.P_diff).var_total;
    };
    // Skip links so dim that the variance does not move within double precision.
    if (std::abs(var(d * (1 + 1e-5)) - var(d * (1 - 1e-5))) < 1e-8 * var(d)) continue;
    ++checked;
    const auto sigma = [&](double dist) { return std::sqrt(var(dist)); };
    const double analytic = dsigma0_dd(c.p, g);
    CHECK(analytic < 0.0);
    CHECK(relative_error(analytic, central_difference(sigma, d, 1e-5 * d)) < 1e-5);
    // Chain rule: d(sigma^2)/dd = 2 sigma dsigma/dd.
    CHECK(relative_error(2.0 * sigma(d) * analytic, central_difference(var, d, 1e-5 * d)) < 1e-5);
  }

  auto dark = default_parameters();
  dark.P_t = 0.0;
  CHECK(dsigma0_dd(dark, Geometry(2.0, 1.0)) == 0.0);

  auto silent = default_parameters();
  silent.B = 0.0;
  CHECK_THROWS_AS(dsigma0_dd(silent, Geometry(2.0, 1.0)), DegenerateModelError);
}
