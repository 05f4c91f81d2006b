#pragma once

#include <cstdint>

#include "vlcrange/channel.hpp"
#include "vlcrange/noise.hpp"
#include "vlcrange/sysparams.hpp"

namespace vlcrange {

/// Ranging bounds at one geometry.
///
/// `crlb_sqrt` accounts for the distance dependence of the shot noise.
/// `crlb_sqrt_legacy` is the bound obtained when the noise is treated as the
/// constant floor sigma_T^2, which is how RSS ranging bounds are usually quoted.
/// An infinite bound (no information, e.g. P_t = 0) is a value, not an error.
struct BoundResult {
  double fisher = 0.0;            ///< [1/m^2]
  double crlb_sqrt = 0.0;         ///< [m]
  double crlb_sqrt_legacy = 0.0;  ///< [m]
  double ratio = 0.0;             ///< crlb_sqrt / crlb_sqrt_legacy
  NoiseBreakdown noise;
};

/// (dP0/dd)^2 * [2 (qB)^2 / sigma0^4 + 1 / sigma0^2].
double fisher_information(const SystemParameters& p, const Geometry& g);

/// sigma0^2 / (|dP0/dd| sqrt(sigma0^2 + 2 (qB)^2)); +inf when dP0/dd = 0.
double crlb_sqrt(const SystemParameters& p, const Geometry& g);

/// sigma_T / |dP0/dd|; +inf when dP0/dd = 0. Throws DegenerateModelError if
/// the noise floor is zero.
double crlb_sqrt_legacy(const SystemParameters& p, const Geometry& g);

BoundResult bound_at(const SystemParameters& p, const Geometry& g);

/// Default relative finite-difference step: step = kDefaultFdStep * d.
inline constexpr double kDefaultFdStep = 1e-5;

/// Fisher information from the general Gaussian identity
///   I = mu'^2 / s2 + s2'^2 / (2 s2^2)
/// with mu' and s2' taken by central differences of the mean and variance
/// along d (h fixed). Uses no analytic derivative.
double fisher_numeric_fd(const SystemParameters& p, const Geometry& g, double step);
double fisher_numeric_fd(const SystemParameters& p, const Geometry& g);

struct FisherMcEstimate {
  std::uint64_t trials = 0;
  double fisher = 0.0;         ///< sample mean of score^2
  double fisher_stderr = 0.0;  ///< standard error of that mean
  double score_mean = 0.0;
  double score_stderr = 0.0;
};

/// Score-variance Monte Carlo: draws x ~ N(P0 + P_diff, sigma0^2) at the
/// true distance and averages the squared analytic score. Requires
/// trials >= 10^4. Deterministic in (seed, trials).
FisherMcEstimate fisher_numeric_mc(const SystemParameters& p, const Geometry& g,
                                   std::uint64_t trials, std::uint64_t seed);

}  // namespace vlcrange
