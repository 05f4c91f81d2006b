#pragma once

#include "vlcrange/sysparams.hpp"

namespace vlcrange {

/// Transmitter/receiver placement with both optical axes vertical.
///
/// The LED points straight down and the photodiode straight up, so the
/// irradiance and incidence angles coincide: cos(phi) = h / d.
class Geometry {
 public:
  /// Throws DomainError unless h > 0 and ell >= 0 (both finite).
  Geometry(double h, double ell);

  /// Placement at Euclidean distance `d` for a known height `h`; d >= h.
  static Geometry from_distance(double h, double d);

  double h() const noexcept { return h_; }
  double ell() const noexcept { return ell_; }
  double d() const noexcept { return d_; }
  double cos_angle() const noexcept { return h_ / d_; }
  /// Incidence (= irradiance) angle in radians.
  double angle() const;

 private:
  double h_;
  double ell_;
  double d_;
};

bool within_fov(const SystemParameters& p, const Geometry& g);

/// LOS DC gain of the Lambertian link; 0 outside the receiver field of view.
double los_gain(const SystemParameters& p, const Geometry& g);

/// P0 = R_p * P_t * gain.
double received_los_power(const SystemParameters& p, const Geometry& g);

/// P0 + P_diff, the noise-free mean of the observation.
double received_power_total(const SystemParameters& p, const Geometry& g);

/// dP0/dd with h held fixed. Zero outside the field of view.
double dP0_dd(const SystemParameters& p, const Geometry& g);

/// d^2 P0 / dd^2 with h held fixed. Zero outside the field of view.
double d2P0_dd2(const SystemParameters& p, const Geometry& g);

// Distance-parametrized forms used by the likelihood. For d >= h these agree
// with the Geometry overloads; for 0 < d < h they continue the aligned-axes
// closed form h^(m+1) / d^(m+3) analytically so that a true distance d = h
// is an interior point of the estimation problem.
double received_los_power_at(const SystemParameters& p, double h, double d);
double dP0_dd_at(const SystemParameters& p, double h, double d);
double d2P0_dd2_at(const SystemParameters& p, double h, double d);

/// m = -ln 2 / ln cos(theta_half). Throws DomainError outside (0, pi/2).
double lambertian_order_from_half_angle(double theta_half);

}  // namespace vlcrange
