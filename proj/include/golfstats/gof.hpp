#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "golfstats/score_model.hpp"

namespace golfstats {

struct KsResult {
  double d_statistic = 0.0;
  double p_value = 1.0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
};

// Two-sample Kolmogorov-Smirnov statistic
//   D = sup_x |F_a(x) - F_b(x)|
// over right-continuous empirical CDFs. Scores are heavily tied, so both
// CDFs are evaluated at every pooled distinct value.
double ks_statistic(std::span<const double> a, std::span<const double> b);

// Kolmogorov tail function Q(lambda) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 lambda^2),
// truncated once terms drop below 1e-12 and clamped to [0, 1].
double ks_tail(double lambda);

// Asymptotic two-sample p-value with Stephens' finite-sample correction:
//   p = Q(lambda),  lambda = (sqrt(ne) + 0.12 + 0.11/sqrt(ne)) * d,
//   ne = n1 n2 / (n1 + n2).
// Throws DomainError if d is outside [0, 1] or a sample size is zero.
double ks_pvalue(double d, std::size_t n1, std::size_t n2);

KsResult two_sample_ks(std::span<const double> a, std::span<const double> b);

struct QqSeries {
  // (quantile_a, quantile_b) at levels 1%..100%.
  std::vector<std::pair<double, double>> points;
  double dither_sigma = 0.2;
  bool dithered = false;
};

// 100 quantile pairs in 1% increments, using the left-continuous inverse
// empirical CDF: the smallest value v with F(v) >= q. When dither_seed is
// given, each emitted coordinate gets N(0, dither_sigma^2) presentation
// noise; no statistic is ever computed from dithered coordinates.
QqSeries qq_points(std::span<const double> a, std::span<const double> b,
                   std::optional<std::uint64_t> dither_seed = std::nullopt,
                   double dither_sigma = 0.2);

// Raw integer scores against the event's discretized-Gaussian model.
KsResult event_ks_test(std::span<const int> scores,
                       const DiscretizedGaussianModel& model);

// Season-scale self-consistency simulation. For every (event, iteration)
// pair: draw n_scores Gaussian scores with the event's moments, KS-test
// them against a fresh model_samples-sample Gaussian with the same moments,
// and collect the p-value. Draws for pair (e, i) come only from the stream
// derived from (seed, e, i), so the returned vector is identical for any
// thread count. Order: p[e * iterations + i].
std::vector<double> pvalue_distribution_simulation(
    std::span<const EventModel> models, int iterations, std::uint64_t seed,
    int threads = 1, int model_samples = kDefaultModelSamples);

}  // namespace golfstats
