#include "vlcrange/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "vlcrange/error.hpp"
#include "vlcrange/mle.hpp"
#include "vlcrange/random.hpp"

namespace vlcrange {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double two_qB_squared(const SystemParameters& p) {
  const double qB = p.q * p.B;
  return 2.0 * qB * qB;
}

double require_positive_variance(double var, const char* what) {
  if (!(var > 0.0)) throw DegenerateModelError(std::string(what) + " is zero");
  return var;
}

double fisher_from(const SystemParameters& p, double var, double slope) {
  return slope * slope / var * (1.0 + two_qB_squared(p) / var);
}

double crlb_from(const SystemParameters& p, double var, double slope) {
  if (slope == 0.0) return kInf;
  return var / (std::abs(slope) * std::sqrt(var + two_qB_squared(p)));
}

double legacy_from(double var_floor, double slope) {
  if (slope == 0.0) return kInf;
  return std::sqrt(var_floor) / std::abs(slope);
}

}  // namespace

double fisher_information(const SystemParameters& p, const Geometry& g) {
  const double var = require_positive_variance(total_noise(p, g).var_total, "total noise variance");
  return fisher_from(p, var, dP0_dd(p, g));
}

double crlb_sqrt(const SystemParameters& p, const Geometry& g) {
  const double var = require_positive_variance(total_noise(p, g).var_total, "total noise variance");
  return crlb_from(p, var, dP0_dd(p, g));
}

double crlb_sqrt_legacy(const SystemParameters& p, const Geometry& g) {
  const double floor = require_positive_variance(noise_floor_variance(p), "noise floor variance");
  return legacy_from(floor, dP0_dd(p, g));
}

BoundResult bound_at(const SystemParameters& p, const Geometry& g) {
  BoundResult r;
  r.noise = total_noise(p, g);
  const double var = require_positive_variance(r.noise.var_total, "total noise variance");
  const double floor = require_positive_variance(r.noise.var_floor, "noise floor variance");
  const double slope = dP0_dd(p, g);
  r.fisher = fisher_from(p, var, slope);
  r.crlb_sqrt = crlb_from(p, var, slope);
  r.crlb_sqrt_legacy = legacy_from(floor, slope);
  // The slope cancels, so the ratio stays finite in the no-signal limit.
  r.ratio = var / (std::sqrt(var + two_qB_squared(p)) * std::sqrt(floor));
  return r;
}

double fisher_numeric_fd(const SystemParameters& p, const Geometry& g, double step) {
  const double h = g.h();
  const double d = g.d();
  if (!(step > 0.0) || !(step < 0.1 * d)) {
    throw DomainError("finite-difference step must lie in (0, 0.1 d)");
  }
  const auto mean = [&](double dist) { return received_los_power_at(p, h, dist) + p.P_diff; };
  const auto var = [&](double dist) { return noise_at_power(p, mean(dist)).var_total; };

  const double s2 = require_positive_variance(var(d), "total noise variance");
  const double mean_slope = (mean(d + step) - mean(d - step)) / (2.0 * step);
  const double var_slope = (var(d + step) - var(d - step)) / (2.0 * step);
  return mean_slope * mean_slope / s2 + var_slope * var_slope / (2.0 * s2 * s2);
}

double fisher_numeric_fd(const SystemParameters& p, const Geometry& g) {
  return fisher_numeric_fd(p, g, kDefaultFdStep * g.d());
}

FisherMcEstimate fisher_numeric_mc(const SystemParameters& p, const Geometry& g,
                                   std::uint64_t trials, std::uint64_t seed) {
  if (trials < 10000) throw DomainError("fisher_numeric_mc: need at least 10^4 trials");
  const double mean = received_power_total(p, g);
  const double sigma =
      std::sqrt(require_positive_variance(total_noise(p, g).var_total, "total noise variance"));

  // Welford accumulators for score and score^2, in trial order.
  double score_mean = 0.0, score_m2 = 0.0;
  double sq_mean = 0.0, sq_m2 = 0.0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    CounterStream stream(seed, StreamTag::FisherScore, i);
    const double x = mean + sigma * stream.normal();
    const double s = score(p, g.h(), g.d(), x);
    const double n = static_cast<double>(i + 1);
    const double delta = s - score_mean;
    score_mean += delta / n;
    score_m2 += delta * (s - score_mean);
    const double s2 = s * s;
    const double delta_sq = s2 - sq_mean;
    sq_mean += delta_sq / n;
    sq_m2 += delta_sq * (s2 - sq_mean);
  }
  const double n = static_cast<double>(trials);
  FisherMcEstimate out;
  out.trials = trials;
  out.fisher = sq_mean;
  out.fisher_stderr = std::sqrt(sq_m2 / (n - 1.0) / n);
  out.score_mean = score_mean;
  out.score_stderr = std::sqrt(score_m2 / (n - 1.0) / n);
  return out;
}

}  // namespace vlcrange
