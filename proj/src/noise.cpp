#include "vlcrange/noise.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "vlcrange/error.hpp"

namespace vlcrange {

double thermal_variance(const SystemParameters& p) {
  constexpr double pi = std::numbers::pi;
  const double kT = p.kappa * p.T_e;
  const double feedback = 8.0 * pi * kT / p.G_ol * p.eta_cap * p.S * p.I2 * p.B * p.B;
  const double channel = 16.0 * pi * pi * kT * p.Gamma / p.g_m * p.eta_cap * p.eta_cap * p.S * p.S *
                         p.I3 * p.B * p.B * p.B;
  return feedback + channel;
}

double background_variance(const SystemParameters& p) {
  return 2.0 * p.q * p.R_p * p.p_BS * p.S * p.lambda_opt * p.B;
}

double dark_current_variance(const SystemParameters& p) { return 2.0 * p.q * p.I_DC * p.B; }

double shot_variance(const SystemParameters& p, double received_power) {
  if (!(received_power >= 0.0)) {
    throw DomainError("shot_variance: received power must be >= 0, got " +
                      std::to_string(received_power));
  }
  return 2.0 * p.q * received_power * p.B;
}

double noise_floor_variance(const SystemParameters& p) {
  return thermal_variance(p) + background_variance(p) + dark_current_variance(p);
}

NoiseBreakdown noise_at_power(const SystemParameters& p, double received_power) {
  NoiseBreakdown n;
  n.var_thermal = thermal_variance(p);
  n.var_background = background_variance(p);
  n.var_dark = dark_current_variance(p);
  n.var_shot = shot_variance(p, received_power);
  n.var_floor = n.var_thermal + n.var_background + n.var_dark;
  n.var_total = n.var_floor + n.var_shot;
  return n;
}

NoiseBreakdown total_noise(const SystemParameters& p, const Geometry& g) {
  return noise_at_power(p, received_power_total(p, g));
}

double dsigma0_dd(const SystemParameters& p, const Geometry& g) {
  const double var = total_noise(p, g).var_total;
  if (!(var > 0.0)) throw DegenerateModelError("total noise variance is zero");
  return p.q * p.B / std::sqrt(var) * dP0_dd(p, g);
}

}  // namespace vlcrange
