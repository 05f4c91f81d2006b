#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "vlcrange/error.hpp"

namespace vlcrange {

struct ScalarOptimum {
  double x = 0.0;
  double value = 0.0;
  bool at_boundary = false;  ///< x is one of the interval endpoints
};

/// Deterministic bracketed maximization of f on [lo, hi].
///
/// A uniform grid of `grid_points` locates the best sample (ties go to the
/// smaller abscissa); golden-section search then shrinks the bracket formed
/// by its two neighbours until it is narrower than `tol`. NaN values rank
/// below every number.
template <class F>
ScalarOptimum maximize_bracketed(F&& f, double lo, double hi, int grid_points, double tol) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("maximize_bracketed: need finite lo < hi");
  }
  if (!(tol > 0.0)) throw DomainError("maximize_bracketed: tol must be > 0");
  if (grid_points < 3) throw DomainError("maximize_bracketed: need at least 3 grid points");

  const auto eval = [&](double x) {
    const double v = f(x);
    return std::isnan(v) ? -std::numeric_limits<double>::infinity() : v;
  };
  const auto grid_x = [&](int i) {
    if (i == grid_points - 1) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid_points - 1);
  };

  int best = 0;
  double best_value = eval(lo);
  for (int i = 1; i < grid_points; ++i) {
    const double v = eval(grid_x(i));
    if (v > best_value) {
      best = i;
      best_value = v;
    }
  }

  double a = grid_x(best > 0 ? best - 1 : 0);
  double b = grid_x(best < grid_points - 1 ? best + 1 : grid_points - 1);
  double fa = eval(a);
  double fb = eval(b);

  constexpr double inv_phi = 0.6180339887498949;
  double c = b - inv_phi * (b - a);
  double e = a + inv_phi * (b - a);
  double fc = eval(c);
  double fe = eval(e);
  while (b - a > tol) {
    if (fc >= fe) {
      b = e;
      fb = fe;
      e = c;
      fe = fc;
      c = b - inv_phi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      fa = fc;
      c = e;
      fc = fe;
      e = a + inv_phi * (b - a);
      fe = eval(e);
    }
  }

  const double mid = 0.5 * (a + b);
  // Ascending abscissa so that ">" keeps the smaller x on ties.
  const double xs[] = {a, c, mid, e, b};
  const double fs[] = {fa, fc, eval(mid), fe, fb};
  ScalarOptimum out{a, fa, false};
  for (int i = 1; i < 5; ++i) {
    if (fs[i] > out.value) {
      out.x = xs[i];
      out.value = fs[i];
    }
  }
  if (best_value > out.value) {
    out.x = grid_x(best);
    out.value = best_value;
  }
  out.at_boundary = out.x == lo || out.x == hi;
  return out;
}

template <class F>
ScalarOptimum minimize_bracketed(F&& f, double lo, double hi, int grid_points, double tol) {
  auto result = maximize_bracketed([&](double x) { return -f(x); }, lo, hi, grid_points, tol);
  result.value = -result.value;
  return result;
}

}  // namespace vlcrange
