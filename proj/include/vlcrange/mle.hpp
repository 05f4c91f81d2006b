#pragma once

#include <cstdint>
#include <optional>

#include "vlcrange/channel.hpp"
#include "vlcrange/sysparams.hpp"

namespace vlcrange {

/// One received-power sample. `x` may be negative (additive Gaussian noise).
struct Observation {
  double x = 0.0;
  std::optional<Geometry> true_geometry;  ///< simulation ground truth, if known
};

// The likelihood is a function of the candidate distance for a known height
// h. Candidates below h use the analytic continuation of the aligned-axes
// power law (see received_los_power_at), so d = h is not a boundary of the
// parameter space.

/// ln p(x; d) = -ln(sigma0(d) sqrt(2 pi)) - (x - P0(d) - P_diff)^2 / (2 sigma0(d)^2).
double log_likelihood(const SystemParameters& p, double h, double d_candidate, double x);

/// d/dd ln p(x; d) written through dP0/dd, including the distance dependence
/// of the shot noise.
double score(const SystemParameters& p, double h, double d_candidate, double x);

struct SearchInterval {
  double lo = 0.0;
  double hi = 0.0;
};

/// [h, 10 h].
SearchInterval default_search_interval(double h);

inline constexpr int kRangeGridPoints = 256;

struct RangeEstimate {
  double d = 0.0;
  double log_likelihood = 0.0;
  bool at_boundary = false;
};

/// Maximum-likelihood distance on `search` to within `tol`: a 256-point grid
/// picks the bracket, golden-section search refines it. Ties resolve toward
/// the smaller distance.
RangeEstimate estimate_range(const SystemParameters& p, double h, double x, SearchInterval search,
                             double tol);

struct McReport {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double true_d = 0.0;
  double mean_estimate = 0.0;
  double bias = 0.0;
  double rmse = 0.0;
  double crlb_sqrt_ref = 0.0;
  double efficiency = 0.0;  ///< crlb_sqrt_ref / rmse
  std::uint64_t failures = 0;  ///< estimates that landed on an interval endpoint
  SearchInterval search;
  double tol = 0.0;

  bool operator==(const McReport& o) const {
    return trials == o.trials && seed == o.seed && true_d == o.true_d &&
           mean_estimate == o.mean_estimate && bias == o.bias && rmse == o.rmse &&
           crlb_sqrt_ref == o.crlb_sqrt_ref && efficiency == o.efficiency &&
           failures == o.failures && search.lo == o.search.lo && search.hi == o.search.hi &&
           tol == o.tol;
  }
};

/// Seeded Monte Carlo of the ML range estimator at `truth`.
///
/// Trial i draws its noise from CounterStream(seed, RangeEstimation, i), so
/// the report does not depend on `threads` (0 = hardware concurrency).
/// Aggregation sums in trial order.
McReport run_monte_carlo(const SystemParameters& p, const Geometry& truth, std::uint64_t trials,
                         std::uint64_t seed, SearchInterval search, double tol,
                         unsigned threads = 0);

}  // namespace vlcrange
