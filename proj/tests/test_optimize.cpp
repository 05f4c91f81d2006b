#include <doctest.h>

#include <cmath>
#include <limits>

#include "vlcrange/error.hpp"
#include "vlcrange/optimize.hpp"

using namespace vlcrange;

TEST_CASE("interior maximum of a smooth function") {
  const auto f = [](double x) { return -(x - 1.2345678) * (x - 1.2345678); };
  const auto r = maximize_bracketed(f, 0.0, 10.0, 64, 1e-9);
  CHECK(std::abs(r.x - 1.2345678) < 1e-8);
  CHECK_FALSE(r.at_boundary);

  const auto m = minimize_bracketed([](double x) { return std::cosh(x - 0.3); }, -2.0, 2.0, 16, 1e-10);
  CHECK(std::abs(m.x - 0.3) < 1e-5);
  CHECK(m.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("grid stage finds the global peak of a multimodal function") {
  // Narrow tall peak at 7, broad low peak at 2.
  const auto f = [](double x) {
    return std::exp(-(x - 2.0) * (x - 2.0)) + 2.0 * std::exp(-50.0 * (x - 7.0) * (x - 7.0));
  };
  const auto r = maximize_bracketed(f, 0.0, 10.0, 256, 1e-9);
  CHECK(std::abs(r.x - 7.0) < 1e-6);
}

TEST_CASE("monotone functions end on the boundary") {
  const auto up = maximize_bracketed([](double x) { return x; }, 1.0, 3.0, 32, 1e-9);
  CHECK(up.x == 3.0);
  CHECK(up.at_boundary);
  const auto down = maximize_bracketed([](double x) { return -x; }, 1.0, 3.0, 32, 1e-9);
  CHECK(down.x == 1.0);
  CHECK(down.at_boundary);
}

TEST_CASE("ties resolve toward the smaller abscissa") {
  const auto flat = maximize_bracketed([](double) { return 1.0; }, 2.0, 5.0, 16, 1e-6);
  CHECK(flat.x == 2.0);
  // Two equal peaks: the left one wins.
  const auto twin = [](double x) {
    return std::max(1.0 - std::abs(x - 1.0), 1.0 - std::abs(x - 3.0));
  };
  const auto r = maximize_bracketed(twin, 0.0, 4.0, 5, 1e-9);
  CHECK(r.x == 1.0);
}

TEST_CASE("NaN values rank lowest") {
  const auto f = [](double x) {
    return x < 0.5 ? std::numeric_limits<double>::quiet_NaN() : -(x - 0.8) * (x - 0.8);
  };
  const auto r = maximize_bracketed(f, 0.0, 1.0, 20, 1e-10);
  CHECK(std::abs(r.x - 0.8) < 1e-6);
}

TEST_CASE("deterministic") {
  const auto f = [](double x) { return std::sin(3.0 * x) * std::exp(-0.1 * x); };
  const auto a = maximize_bracketed(f, 0.0, 20.0, 100, 1e-12);
  const auto b = maximize_bracketed(f, 0.0, 20.0, 100, 1e-12);
  CHECK(a.x == b.x);
  CHECK(a.value == b.value);
}

TEST_CASE("argument validation") {
  const auto f = [](double x) { return x; };
  CHECK_THROWS_AS(maximize_bracketed(f, 1.0, 1.0, 10, 1e-6), DomainError);
  CHECK_THROWS_AS(maximize_bracketed(f, 2.0, 1.0, 10, 1e-6), DomainError);
  CHECK_THROWS_AS(maximize_bracketed(f, 0.0, 1.0, 2, 1e-6), DomainError);
  CHECK_THROWS_AS(maximize_bracketed(f, 0.0, 1.0, 10, 0.0), DomainError);
  CHECK_THROWS_AS(maximize_bracketed(f, 0.0, std::numeric_limits<double>::infinity(), 10, 1e-6),
                  DomainError);
}
