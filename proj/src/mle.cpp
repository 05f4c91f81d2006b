#include "vlcrange/mle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "vlcrange/bounds.hpp"
#include "vlcrange/error.hpp"
#include "vlcrange/noise.hpp"
#include "vlcrange/optimize.hpp"
#include "vlcrange/parallel.hpp"
#include "vlcrange/random.hpp"

namespace vlcrange {

namespace {

struct ModelPoint {
  double mean;
  double var;
};

ModelPoint model_at(const SystemParameters& p, double h, double d) {
  if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("candidate distance must be > 0");
  const double mean = received_los_power_at(p, h, d) + p.P_diff;
  const double var = noise_at_power(p, mean).var_total;
  if (!(var > 0.0)) throw DegenerateModelError("total noise variance is zero");
  return {mean, var};
}

void check_observation(double x) {
  if (!std::isfinite(x)) throw DomainError("observation x must be finite");
}

}  // namespace

double log_likelihood(const SystemParameters& p, double h, double d_candidate, double x) {
  const auto [mean, var] = model_at(p, h, d_candidate);
  const double r = x - mean;
  return -0.5 * std::log(2.0 * std::numbers::pi * var) - r * r / (2.0 * var);
}

double score(const SystemParameters& p, double h, double d_candidate, double x) {
  const auto [mean, var] = model_at(p, h, d_candidate);
  const double slope = dP0_dd_at(p, h, d_candidate);
  const double qB = p.q * p.B;
  const double r = x - mean;
  return -qB / var * slope + qB / (var * var) * r * r * slope + r / var * slope;
}

SearchInterval default_search_interval(double h) { return {h, 10.0 * h}; }

RangeEstimate estimate_range(const SystemParameters& p, double h, double x, SearchInterval search,
                             double tol) {
  check_observation(x);
  if (!(h > 0.0)) throw DomainError("height h must be > 0");
  if (!(search.lo > 0.0) || !(search.lo < search.hi) || !std::isfinite(search.hi)) {
    throw DomainError("search interval must satisfy 0 < lo < hi");
  }
  if (!(tol > 0.0)) throw DomainError("tolerance must be > 0");
  const auto best = maximize_bracketed([&](double d) { return log_likelihood(p, h, d, x); },
                                       search.lo, search.hi, kRangeGridPoints, tol);
  return {best.x, best.value, best.at_boundary};
}

McReport run_monte_carlo(const SystemParameters& p, const Geometry& truth, std::uint64_t trials,
                         std::uint64_t seed, SearchInterval search, double tol, unsigned threads) {
  if (trials < 100) throw DomainError("run_monte_carlo: need at least 100 trials");
  const double h = truth.h();
  const double d0 = truth.d();
  const double mean = received_power_total(p, truth);
  const double sigma = std::sqrt(total_noise(p, truth).var_total);

  std::vector<RangeEstimate> estimates(trials);
  parallel_for(trials, threads, [&](std::size_t i) {
    CounterStream stream(seed, StreamTag::RangeEstimation, i);
    const double x = mean + sigma * stream.normal();
    estimates[i] = estimate_range(p, h, x, search, tol);
  });

  McReport report;
  report.trials = trials;
  report.seed = seed;
  report.true_d = d0;
  report.search = search;
  report.tol = tol;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (const auto& e : estimates) {
    sum += e.d;
    sum_sq += (e.d - d0) * (e.d - d0);
    if (e.at_boundary) ++report.failures;
  }
  const double n = static_cast<double>(trials);
  report.mean_estimate = sum / n;
  report.bias = report.mean_estimate - d0;
  report.rmse = std::sqrt(sum_sq / n);
  report.crlb_sqrt_ref = crlb_sqrt(p, truth);
  report.efficiency = report.rmse > 0.0 ? report.crlb_sqrt_ref / report.rmse
                                        : std::numeric_limits<double>::infinity();
  return report;
}

}  // namespace vlcrange
