#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "vlcrange/bounds.hpp"
#include "vlcrange/error.hpp"
#include "vlcrange/serialize.hpp"
#include "vlcrange/sweep.hpp"

using namespace vlcrange;
using vlcrange::testing::relative_error;

TEST_CASE("axis values") {
  CHECK(axis_values({1.0, 1.0, 1}) == std::vector<double>{1.0});
  CHECK(axis_values({3.0, 7.0, 1}) == std::vector<double>{3.0});
  const auto v = axis_values({1.0, 3.0, 11});
  REQUIRE(v.size() == 11);
  CHECK(v.front() == 1.0);
  CHECK(v.back() == 3.0);
  CHECK(v[5] == doctest::Approx(2.0));
  const auto w = axis_values({0.1, 0.7, 7});
  CHECK(w.back() == 0.7);
}

TEST_CASE("quantity names") {
  for (auto q : {SweepQuantity::NoiseTotal, SweepQuantity::CrlbSqrt, SweepQuantity::CrlbSqrtLegacy,
                 SweepQuantity::Ratio, SweepQuantity::Fisher}) {
    CHECK(parse_quantity(to_string(q)) == q);
  }
  CHECK_THROWS_AS(parse_quantity("crlb"), ValidationError);
}

TEST_CASE("spec validation") {
  auto s = repro_spec("fig3");
  CHECK_NOTHROW(validate(s));
  auto bad = s;
  bad.h_range.min = 0.0;
  CHECK_THROWS_AS(validate(bad), ValidationError);
  bad = s;
  bad.ell_range.min = -0.5;
  CHECK_THROWS_AS(validate(bad), ValidationError);
  bad = s;
  bad.ell_range = {2.0, 1.0, 3};
  CHECK_THROWS_AS(validate(bad), ValidationError);
  bad = s;
  bad.h_range.steps = 0;
  CHECK_THROWS_AS(validate(bad), ValidationError);
  bad = s;
  bad.p_t_list.clear();
  CHECK_THROWS_AS(validate(bad), ValidationError);
  bad = s;
  bad.m_list = {-1.0};
  CHECK_THROWS_AS(validate(bad), ValidationError);
  CHECK_THROWS_AS(repro_spec("fig9"), ValidationError);
}

TEST_CASE("single point sweep equals the direct computation") {
  const auto p = default_parameters();
  SweepSpec s;
  s.ell_range = {1.3, 1.3, 1};
  s.h_range = {2.1, 2.1, 1};
  s.m_list = {4.0};
  s.p_t_list = {3.0};
  auto q = p;
  q.m = 4.0;
  q.P_t = 3.0;
  const Geometry g(2.1, 1.3);
  const auto b = bound_at(q, g);
  s.quantity = SweepQuantity::CrlbSqrt;
  CHECK(run_sweep(p, s).values.at(0) == b.crlb_sqrt);
  s.quantity = SweepQuantity::CrlbSqrtLegacy;
  CHECK(run_sweep(p, s).values.at(0) == b.crlb_sqrt_legacy);
  s.quantity = SweepQuantity::Ratio;
  CHECK(run_sweep(p, s).values.at(0) == b.ratio);
  s.quantity = SweepQuantity::Fisher;
  CHECK(run_sweep(p, s).values.at(0) == b.fisher);
  s.quantity = SweepQuantity::NoiseTotal;
  CHECK(run_sweep(p, s).values.at(0) == b.noise.var_total);
}

TEST_CASE("grid indexing and thread independence") {
  const auto p = default_parameters();
  SweepSpec s = repro_spec("fig4");
  s.m_list = {1.0, 2.0};
  const auto r = run_sweep(p, s, 1);
  CHECK(r.values.size() == 2 * 4 * 11 * 11);
  const auto r3 = run_sweep(p, s, 3);
  CHECK(r3.values == r.values);
  auto q = p;
  q.m = 2.0;
  q.P_t = 10.0;
  CHECK(r.at(1, 2, 4, 7) == crlb_sqrt(q, Geometry(r.h[4], r.ell[7])));
  CHECK(r.index(1, 2, 4, 7) == ((1 * 4 + 2) * 11 + 4) * 11 + 7);

  const auto mean = mean_over_ell(r);
  double sum = 0.0;
  for (std::size_t il = 0; il < r.ell.size(); ++il) sum += r.at(1, 3, 9, il);
  CHECK(mean.at(1, 3, 9) == sum / 11.0);
}

TEST_CASE("invalid parameter combinations are rejected before computing") {
  auto p = default_parameters();
  SweepSpec s = repro_spec("fig3");
  p.S = 0.0;
  CHECK_THROWS_AS(run_sweep(p, s), ValidationError);
}

TEST_CASE("reproduction grids") {
  const auto p = default_parameters();

  SUBCASE("fig2: noise grows toward the LED and with the link closing") {
    const auto r = run_sweep(p, repro_spec("fig2"));
    CHECK(r.ell.size() == 21);
    CHECK(r.h.size() == 11);
    CHECK(r.m == std::vector<double>{50.0});
    double best = 0.0;
    std::size_t bh = 99, bl = 99;
    for (std::size_t ih = 0; ih < r.h.size(); ++ih) {
      for (std::size_t il = 0; il < r.ell.size(); ++il) {
        const double v = r.at(0, 0, ih, il);
        CHECK(v >= total_noise(p, Geometry(3.0, 2.0)).var_floor);
        if (v > best) {
          best = v;
          bh = ih;
          bl = il;
        }
      }
    }
    CHECK(bh == 0);
    CHECK(bl == 0);
  }

  SUBCASE("fig3 and fig4: bound grows with ell and falls with P_t") {
    const auto r = run_sweep(p, repro_spec("fig4"));
    for (std::size_t ih = 0; ih < r.h.size(); ++ih) {
      for (std::size_t il = 0; il < r.ell.size(); ++il) {
        for (std::size_t ip = 1; ip < r.p_t.size(); ++ip) {
          CHECK(r.at(0, ip, ih, il) < r.at(0, ip - 1, ih, il));
        }
        if (il > 0) CHECK(r.at(0, 0, ih, il) > r.at(0, 0, ih, il - 1));
      }
    }
    const auto r3 = run_sweep(p, repro_spec("fig3"));
    CHECK(r3.values.size() == 121);
  }

  SUBCASE("fig5: ratio is at least one and grows with P_t") {
    const auto r = run_sweep(p, repro_spec("fig5"));
    for (std::size_t i = 0; i < r.values.size(); ++i) CHECK(r.values[i] >= 1.0);
    const auto mean = mean_over_ell(r);
    for (std::size_t ih = 0; ih < mean.h.size(); ++ih) {
      for (std::size_t ip = 1; ip < mean.p_t.size(); ++ip) {
        CHECK(mean.at(0, ip, ih) > mean.at(0, ip - 1, ih));
      }
    }
  }
}

TEST_CASE("optimal Lambertian order") {
  const auto p = default_parameters();
  const auto bound_of = [&](const Geometry& g, double m) {
    auto q = p;
    q.m = m;
    return crlb_sqrt(q, g);
  };

  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 5; ++i) {
    const Geometry g(1.0 + 2.0 * unit(rng), 0.3 + 1.7 * unit(rng));
    const double tol = 1e-6;
    const auto r = find_m_opt(p, g, 1.0, 200.0, tol);
    const double brute = vlcrange::testing::grid_argmax(
        [&](double m) { return -bound_of(g, m); }, 1.0, 200.0, 100001);
    const double spacing = 199.0 / 100000.0;
    CHECK(std::abs(r.m_opt - brute) <= spacing);
    CHECK(r.crlb_sqrt <= bound_of(g, brute));
    CHECK(r.crlb_sqrt == bound_of(g, r.m_opt));
    // Unimodal: bound falls to m_opt and rises after it.
    double prev = bound_of(g, 1.0);
    for (double m = 1.5; m < r.m_opt - 1.0; m += 0.5) {
      const double v = bound_of(g, m);
      CHECK(v < prev);
      prev = v;
    }
    prev = bound_of(g, r.m_opt + 1.0);
    for (double m = r.m_opt + 1.5; m <= 200.0; m *= 1.1) {
      const double v = bound_of(g, m);
      CHECK(v > prev);
      prev = v;
    }
    const auto fine = find_m_opt(p, g, 1.0, 200.0, tol, 2 * kMOptGridPoints);
    CHECK(std::abs(fine.m_opt - r.m_opt) < 2.0 * tol);
  }

  const auto r = find_m_opt(p, Geometry(2.0, 1.0), 1.0, 200.0, 1e-6);
  CHECK(std::abs(r.m_opt - 15.9839) < 1e-3);
  CHECK_FALSE(r.at_boundary);

  CHECK_THROWS_AS(find_m_opt(p, Geometry(2.0, 0.0), 1.0, 200.0, 1e-6), DomainError);
  CHECK_THROWS_AS(find_m_opt(p, Geometry(2.0, 1.0), 0.5, 200.0, 1e-6), DomainError);
  CHECK_THROWS_AS(find_m_opt(p, Geometry(2.0, 1.0), 1.0, 201.0, 1e-6), DomainError);
  CHECK_THROWS_AS(find_m_opt(p, Geometry(2.0, 1.0), 5.0, 5.0, 1e-6), DomainError);
}

TEST_CASE("closed-form approximation of the optimal order") {
  CHECK(m_opt_approximation(std::numbers::pi / 4) == doctest::Approx(3.939154303852452).epsilon(1e-14));
  CHECK(std::abs(m_opt_approximation(std::numbers::pi / 4) - 3.93916) < 1e-5);
  // Approximation against the exact optimum at h = 2, ell = 1.
  const auto p = default_parameters();
  const Geometry g(2.0, 1.0);
  const double approx = m_opt_approximation(g.angle());
  CHECK(std::abs(approx - 15.9813) < 1e-3);
  CHECK(relative_error(approx, find_m_opt(p, g, 1.0, 200.0, 1e-8).m_opt) < 1e-3);
  CHECK_THROWS_AS(m_opt_approximation(0.0), DomainError);
  CHECK_THROWS_AS(m_opt_approximation(std::numbers::pi / 2), DomainError);
  CHECK_THROWS_AS(m_opt_approximation(-0.1), DomainError);
}

TEST_CASE("sweep serialization") {
  const auto p = default_parameters();
  SweepSpec s = repro_spec("fig4");
  s.h_range = {1.0, 2.0, 2};
  s.ell_range = {1.0, 2.0, 3};
  const auto r = run_sweep(p, s);
  const std::string csv = sweep_to_csv(r);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "m,P_t_W,h_m,ell_m,value");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 4 * 2 * 3);

  const auto mean_csv = ell_mean_to_csv(mean_over_ell(r));
  CHECK(mean_csv.rfind("m,P_t_W,h_m,value\n", 0) == 0);
  CHECK(std::count(mean_csv.begin(), mean_csv.end(), '\n') == 1 + 4 * 2);
}
