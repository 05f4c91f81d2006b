#pragma once

#include "vlcrange/channel.hpp"
#include "vlcrange/sysparams.hpp"

namespace vlcrange {

/// Receiver noise variances at one operating point [W^2].
struct NoiseBreakdown {
  double var_thermal = 0.0;
  double var_background = 0.0;
  double var_dark = 0.0;
  double var_shot = 0.0;
  double var_floor = 0.0;  ///< thermal + background + dark
  double var_total = 0.0;  ///< floor + shot

  bool operator==(const NoiseBreakdown&) const = default;
};

double thermal_variance(const SystemParameters& p);
double background_variance(const SystemParameters& p);
double dark_current_variance(const SystemParameters& p);

/// Signal shot noise 2 q P B for total received power P >= 0.
double shot_variance(const SystemParameters& p, double received_power);

/// The signal-independent part of the noise.
double noise_floor_variance(const SystemParameters& p);

/// Breakdown for a given total received power P0 + P_diff.
NoiseBreakdown noise_at_power(const SystemParameters& p, double received_power);

NoiseBreakdown total_noise(const SystemParameters& p, const Geometry& g);

/// d sigma0 / dd = (q B / sigma0) dP0/dd. Throws DegenerateModelError when
/// the total variance is zero.
double dsigma0_dd(const SystemParameters& p, const Geometry& g);

}  // namespace vlcrange
