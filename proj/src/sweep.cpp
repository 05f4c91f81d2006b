#include "vlcrange/sweep.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "vlcrange/bounds.hpp"
#include "vlcrange/error.hpp"
#include "vlcrange/noise.hpp"
#include "vlcrange/optimize.hpp"
#include "vlcrange/parallel.hpp"

namespace vlcrange {

namespace {

void check_range(const AxisRange& r, const char* name, double lower_bound, bool strict) {
  const std::string n(name);
  if (!std::isfinite(r.min) || !std::isfinite(r.max)) throw ValidationError(n, "must be finite");
  if (r.min > r.max) throw ValidationError(n, "min must be <= max");
  if (r.steps < 1) throw ValidationError(n, "steps must be >= 1");
  if (strict ? !(r.min > lower_bound) : !(r.min >= lower_bound)) {
    throw ValidationError(n, strict ? "values must be > 0" : "values must be >= 0");
  }
}

void check_list(const std::vector<double>& list, const char* name) {
  const std::string n(name);
  if (list.empty()) throw ValidationError(n, "list must be non-empty");
  for (double v : list) {
    if (!std::isfinite(v) || v < 0.0) throw ValidationError(n, "entries must be finite and >= 0");
  }
}

double evaluate(const SystemParameters& p, const Geometry& g, SweepQuantity q) {
  switch (q) {
    case SweepQuantity::NoiseTotal:
      return total_noise(p, g).var_total;
    case SweepQuantity::CrlbSqrt:
      return crlb_sqrt(p, g);
    case SweepQuantity::CrlbSqrtLegacy:
      return crlb_sqrt_legacy(p, g);
    case SweepQuantity::Ratio:
      return bound_at(p, g).ratio;
    case SweepQuantity::Fisher:
      return fisher_information(p, g);
  }
  return 0.0;
}

}  // namespace

std::string_view to_string(SweepQuantity q) {
  switch (q) {
    case SweepQuantity::NoiseTotal:
      return "noise_total";
    case SweepQuantity::CrlbSqrt:
      return "crlb_sqrt";
    case SweepQuantity::CrlbSqrtLegacy:
      return "crlb_sqrt_legacy";
    case SweepQuantity::Ratio:
      return "ratio";
    case SweepQuantity::Fisher:
      return "fisher";
  }
  return "";
}

SweepQuantity parse_quantity(std::string_view name) {
  for (auto q : {SweepQuantity::NoiseTotal, SweepQuantity::CrlbSqrt, SweepQuantity::CrlbSqrtLegacy,
                 SweepQuantity::Ratio, SweepQuantity::Fisher}) {
    if (to_string(q) == name) return q;
  }
  throw ValidationError("quantity", "unknown sweep quantity '" + std::string(name) + "'");
}

void validate(const SweepSpec& spec) {
  check_range(spec.ell_range, "ell_range", 0.0, false);
  check_range(spec.h_range, "h_range", 0.0, true);
  check_list(spec.p_t_list, "p_t_list");
  check_list(spec.m_list, "m_list");
}

std::vector<double> axis_values(const AxisRange& range) {
  std::vector<double> out(static_cast<std::size_t>(range.steps));
  for (int i = 0; i < range.steps; ++i) {
    if (i == range.steps - 1 && range.steps > 1) {
      out[static_cast<std::size_t>(i)] = range.max;
    } else {
      const double t = range.steps > 1 ? static_cast<double>(i) / (range.steps - 1) : 0.0;
      out[static_cast<std::size_t>(i)] = range.min + (range.max - range.min) * t;
    }
  }
  return out;
}

SweepResult run_sweep(const SystemParameters& p, const SweepSpec& spec, unsigned threads) {
  validate(spec);
  SweepResult r;
  r.m = spec.m_list;
  r.p_t = spec.p_t_list;
  r.h = axis_values(spec.h_range);
  r.ell = axis_values(spec.ell_range);
  r.parameters = p;
  r.spec = spec;

  // Validate every parameter combination up front so workers only compute.
  for (double m : r.m) {
    for (double pt : r.p_t) {
      SystemParameters point = p;
      point.m = m;
      point.P_t = pt;
      validate(point);
    }
  }

  const std::size_t n = r.m.size() * r.p_t.size() * r.h.size() * r.ell.size();
  r.values.assign(n, 0.0);
  const std::size_t per_h = r.ell.size();
  const std::size_t per_p = r.h.size() * per_h;
  const std::size_t per_m = r.p_t.size() * per_p;
  parallel_for(n, threads, [&](std::size_t i) {
    SystemParameters point = p;
    point.m = r.m[i / per_m];
    point.P_t = r.p_t[(i % per_m) / per_p];
    const Geometry g(r.h[(i % per_p) / per_h], r.ell[i % per_h]);
    r.values[i] = evaluate(point, g, spec.quantity);
  });
  return r;
}

EllMean mean_over_ell(const SweepResult& result) {
  EllMean out;
  out.m = result.m;
  out.p_t = result.p_t;
  out.h = result.h;
  out.values.reserve(out.m.size() * out.p_t.size() * out.h.size());
  for (std::size_t im = 0; im < out.m.size(); ++im) {
    for (std::size_t ip = 0; ip < out.p_t.size(); ++ip) {
      for (std::size_t ih = 0; ih < out.h.size(); ++ih) {
        double sum = 0.0;
        for (std::size_t il = 0; il < result.ell.size(); ++il) sum += result.at(im, ip, ih, il);
        out.values.push_back(sum / static_cast<double>(result.ell.size()));
      }
    }
  }
  return out;
}

SweepSpec repro_spec(std::string_view figure) {
  SweepSpec s;
  s.ell_range = {1.0, 2.0, 11};
  s.h_range = {1.0, 3.0, 11};
  s.m_list = {1.0};
  s.p_t_list = {1.0};
  if (figure == "fig2") {
    // Shot-noise surface for a narrow beam, including the point below the LED.
    s.ell_range = {0.0, 2.0, 21};
    s.m_list = {50.0};
    s.quantity = SweepQuantity::NoiseTotal;
  } else if (figure == "fig3") {
    s.quantity = SweepQuantity::CrlbSqrt;
  } else if (figure == "fig4") {
    s.p_t_list = {1.0, 5.0, 10.0, 15.0};
    s.quantity = SweepQuantity::CrlbSqrt;
  } else if (figure == "fig5") {
    s.p_t_list = {1.0, 5.0, 10.0, 15.0};
    s.quantity = SweepQuantity::Ratio;
  } else {
    throw ValidationError("repro", "unknown figure '" + std::string(figure) +
                                       "' (expected fig2, fig3, fig4 or fig5)");
  }
  return s;
}

MOptResult find_m_opt(const SystemParameters& p, const Geometry& g, double m_lo, double m_hi,
                      double tol, int grid_points) {
  if (!(g.ell() > 0.0)) {
    throw DomainError(
        "find_m_opt requires ell > 0: directly below the LED the bound decreases "
        "monotonically in m, so there is no interior optimum");
  }
  if (!(m_lo >= 1.0 && m_lo < m_hi && m_hi <= 200.0)) {
    throw DomainError("find_m_opt requires 1 <= m_lo < m_hi <= 200");
  }
  const auto bound_of = [&](double m) {
    SystemParameters point = p;
    point.m = m;
    return crlb_sqrt(point, g);
  };
  const auto best = minimize_bracketed(bound_of, m_lo, m_hi, grid_points, tol);
  return {best.x, best.value, best.at_boundary};
}

double m_opt_approximation(double phi) {
  if (!(phi > 0.0 && phi < std::numbers::pi / 2)) {
    throw DomainError("m_opt_approximation requires 0 < phi < pi/2");
  }
  const double inv = 1.0 / std::log(std::cos(phi));
  if (!std::isfinite(inv)) throw DomainError("m_opt_approximation: ln cos(phi) underflows to 0");
  return -(2.0 + inv) + std::sqrt(1.0 + inv * inv);
}

}  // namespace vlcrange
