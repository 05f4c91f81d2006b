#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "vlcrange/channel.hpp"
#include "vlcrange/sysparams.hpp"

namespace vlcrange {

/// Inclusive linear range. steps == 1 yields {min}.
struct AxisRange {
  double min = 0.0;
  double max = 0.0;
  int steps = 1;

  bool operator==(const AxisRange&) const = default;
};

enum class SweepQuantity { NoiseTotal, CrlbSqrt, CrlbSqrtLegacy, Ratio, Fisher };

std::string_view to_string(SweepQuantity q);
/// Accepts "noise_total", "crlb_sqrt", "crlb_sqrt_legacy", "ratio", "fisher".
SweepQuantity parse_quantity(std::string_view name);

struct SweepSpec {
  AxisRange ell_range;
  AxisRange h_range;
  std::vector<double> p_t_list;
  std::vector<double> m_list;
  SweepQuantity quantity = SweepQuantity::CrlbSqrt;

  bool operator==(const SweepSpec&) const = default;
};

void validate(const SweepSpec& spec);

std::vector<double> axis_values(const AxisRange& range);

/// Dense grid in row-major order with axes (m, P_t, h, ell); ell varies fastest.
struct SweepResult {
  std::vector<double> m;
  std::vector<double> p_t;
  std::vector<double> h;
  std::vector<double> ell;
  std::vector<double> values;
  SystemParameters parameters;
  SweepSpec spec;

  std::size_t index(std::size_t im, std::size_t ip, std::size_t ih, std::size_t il) const {
    return ((im * p_t.size() + ip) * h.size() + ih) * ell.size() + il;
  }
  double at(std::size_t im, std::size_t ip, std::size_t ih, std::size_t il) const {
    return values[index(im, ip, ih, il)];
  }
};

/// Evaluates `spec.quantity` at every grid point. The m and P_t entries of
/// `p` are replaced by the grid values. Output is independent of `threads`.
SweepResult run_sweep(const SystemParameters& p, const SweepSpec& spec, unsigned threads = 0);

/// Unweighted arithmetic mean over the ell axis; axes (m, P_t, h).
struct EllMean {
  std::vector<double> m;
  std::vector<double> p_t;
  std::vector<double> h;
  std::vector<double> values;

  double at(std::size_t im, std::size_t ip, std::size_t ih) const {
    return values[(im * p_t.size() + ip) * h.size() + ih];
  }
};

EllMean mean_over_ell(const SweepResult& result);

/// Named reference grids: "fig2", "fig3", "fig4", "fig5".
SweepSpec repro_spec(std::string_view figure);

struct MOptResult {
  double m_opt = 0.0;
  double crlb_sqrt = 0.0;
  bool at_boundary = false;
};

inline constexpr int kMOptGridPoints = 512;

/// Lambertian order minimizing crlb_sqrt over [m_lo, m_hi] at a fixed
/// geometry. Requires ell > 0: directly below the LED the bound keeps
/// falling as m grows, so no interior optimum exists.
MOptResult find_m_opt(const SystemParameters& p, const Geometry& g, double m_lo, double m_hi,
                      double tol, int grid_points = kMOptGridPoints);

/// Closed-form approximation
///   m_opt ~ -(2 + 1/ln cos phi) + sqrt(1 + (1/ln cos phi)^2),  0 < phi < pi/2.
double m_opt_approximation(double phi);

}  // namespace vlcrange
