#include "vlcrange/channel.hpp"

#include <cmath>
#include <numbers>

#include "vlcrange/error.hpp"

namespace vlcrange {

namespace {

// R_p * P_t * S / (2 pi) * T_s * g_conc
double power_prefactor(const SystemParameters& p) {
  return p.R_p * p.P_t * p.S / (2.0 * std::numbers::pi) * p.T_s * p.g_conc;
}

// h^(m+1) / d^(m+k) written as (h/d)^(m+1) / d^(k-1), which stays finite for large m.
double height_ratio(double m, double h, double d, int k) {
  return std::pow(h / d, m + 1.0) / std::pow(d, k - 1);
}

bool distance_in_fov(const SystemParameters& p, double h, double d) {
  if (d <= h) return true;
  return std::acos(h / d) <= p.phi_con;
}

void check_distance(double h, double d) {
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("height h must be positive and finite");
  if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("distance d must be positive and finite");
}

}  // namespace

Geometry::Geometry(double h, double ell) : h_(h), ell_(ell), d_(std::hypot(h, ell)) {
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("geometry: h must be > 0");
  if (!(ell >= 0.0) || !std::isfinite(ell)) throw DomainError("geometry: ell must be >= 0");
}

Geometry Geometry::from_distance(double h, double d) {
  if (!(d >= h)) throw DomainError("geometry: d must be >= h");
  return Geometry(h, std::sqrt((d - h) * (d + h)));
}

double Geometry::angle() const { return std::acos(cos_angle()); }

bool within_fov(const SystemParameters& p, const Geometry& g) { return g.angle() <= p.phi_con; }

double los_gain(const SystemParameters& p, const Geometry& g) {
  if (!within_fov(p, g)) return 0.0;
  const double c = g.cos_angle();
  return (p.m + 1.0) * p.S / (2.0 * std::numbers::pi * g.d() * g.d()) * std::pow(c, p.m) * p.T_s *
         p.g_conc * c;
}

double received_los_power(const SystemParameters& p, const Geometry& g) {
  if (!within_fov(p, g)) return 0.0;
  return received_los_power_at(p, g.h(), g.d());
}

double received_power_total(const SystemParameters& p, const Geometry& g) {
  return received_los_power(p, g) + p.P_diff;
}

double dP0_dd(const SystemParameters& p, const Geometry& g) {
  if (!within_fov(p, g)) return 0.0;
  return dP0_dd_at(p, g.h(), g.d());
}

double d2P0_dd2(const SystemParameters& p, const Geometry& g) {
  if (!within_fov(p, g)) return 0.0;
  return d2P0_dd2_at(p, g.h(), g.d());
}

double received_los_power_at(const SystemParameters& p, double h, double d) {
  check_distance(h, d);
  if (!distance_in_fov(p, h, d)) return 0.0;
  return power_prefactor(p) * (p.m + 1.0) * height_ratio(p.m, h, d, 3);
}

double dP0_dd_at(const SystemParameters& p, double h, double d) {
  check_distance(h, d);
  if (!distance_in_fov(p, h, d)) return 0.0;
  return -power_prefactor(p) * (p.m + 1.0) * (p.m + 3.0) * height_ratio(p.m, h, d, 4);
}

double d2P0_dd2_at(const SystemParameters& p, double h, double d) {
  check_distance(h, d);
  if (!distance_in_fov(p, h, d)) return 0.0;
  return power_prefactor(p) * (p.m + 1.0) * (p.m + 3.0) * (p.m + 4.0) * height_ratio(p.m, h, d, 5);
}

double lambertian_order_from_half_angle(double theta_half) {
  if (!(theta_half > 0.0 && theta_half < std::numbers::pi / 2)) {
    throw DomainError("half-power angle must lie in (0, pi/2)");
  }
  return -std::log(2.0) / std::log(std::cos(theta_half));
}

}  // namespace vlcrange
