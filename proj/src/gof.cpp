#include "golfstats/gof.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "golfstats/errors.hpp"
#include "golfstats/rng.hpp"

namespace golfstats {

namespace {

std::vector<double> sorted_copy(std::span<const double> xs) {
  std::vector<double> v(xs.begin(), xs.end());
  std::sort(v.begin(), v.end());
  return v;
}

// Left-continuous inverse ECDF at level k/100: the smallest sorted value
// whose ECDF reaches the level. Index arithmetic kept in integers.
double quantile_at_percent(const std::vector<double>& sorted, int k) {
  const std::size_t n = sorted.size();
  std::size_t idx = (static_cast<std::size_t>(k) * n + 99) / 100;
  return sorted[idx - 1];
}

}  // namespace

double ks_statistic(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) {
    throw ValidationError("ks_statistic: empty sample");
  }
  const std::vector<double> sa = sorted_copy(a);
  const std::vector<double> sb = sorted_copy(b);
  const double na = static_cast<double>(sa.size());
  const double nb = static_cast<double>(sb.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  // Walk the pooled distinct values; both ECDFs are evaluated at each.
  while (i < sa.size() || j < sb.size()) {
    double v;
    if (i == sa.size()) {
      v = sb[j];
    } else if (j == sb.size()) {
      v = sa[i];
    } else {
      v = std::min(sa[i], sb[j]);
    }
    while (i < sa.size() && sa[i] == v) ++i;
    while (j < sb.size() && sb[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na -
                             static_cast<double>(j) / nb));
  }
  return d;
}

double ks_tail(double lambda) {
  if (lambda < 1e-10) {
    return 1.0;
  }
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 512; ++k) {
    const double kk = static_cast<double>(k);
    const double term = 2.0 * std::exp(-2.0 * kk * kk * lambda * lambda);
    sum += sign * term;
    if (term < 1e-12) {
      return std::clamp(sum, 0.0, 1.0);
    }
    sign = -sign;
  }
  // Terms decay too slowly only when lambda is tiny; the tail is 1 there.
  return 1.0;
}

double ks_pvalue(double d, std::size_t n1, std::size_t n2) {
  if (d < 0.0 || d > 1.0) {
    throw DomainError("ks_pvalue: d must lie in [0, 1]");
  }
  if (n1 == 0 || n2 == 0) {
    throw DomainError("ks_pvalue: sample sizes must be positive");
  }
  if (d == 0.0) {
    return 1.0;
  }
  const double ne = static_cast<double>(n1) * static_cast<double>(n2) /
                    static_cast<double>(n1 + n2);
  const double sqrt_ne = std::sqrt(ne);
  const double lambda = (sqrt_ne + 0.12 + 0.11 / sqrt_ne) * d;
  return ks_tail(lambda);
}

KsResult two_sample_ks(std::span<const double> a, std::span<const double> b) {
  const double d = ks_statistic(a, b);
  return {d, ks_pvalue(d, a.size(), b.size()), a.size(), b.size()};
}

QqSeries qq_points(std::span<const double> a, std::span<const double> b,
                   std::optional<std::uint64_t> dither_seed,
                   double dither_sigma) {
  if (a.empty() || b.empty()) {
    throw ValidationError("qq_points: empty sample");
  }
  const std::vector<double> sa = sorted_copy(a);
  const std::vector<double> sb = sorted_copy(b);
  QqSeries series;
  series.dither_sigma = dither_sigma;
  series.points.reserve(100);
  for (int k = 1; k <= 100; ++k) {
    series.points.emplace_back(quantile_at_percent(sa, k),
                               quantile_at_percent(sb, k));
  }
  if (dither_seed) {
    series.dithered = true;
    RngStream rng(*dither_seed);
    for (auto& [x, y] : series.points) {
      x += rng.normal(0.0, dither_sigma);
      y += rng.normal(0.0, dither_sigma);
    }
  }
  return series;
}

KsResult event_ks_test(std::span<const int> scores,
                       const DiscretizedGaussianModel& model) {
  std::vector<double> a(scores.begin(), scores.end());
  std::vector<double> b(model.samples.begin(), model.samples.end());
  return two_sample_ks(a, b);
}

std::vector<double> pvalue_distribution_simulation(
    std::span<const EventModel> models, int iterations, std::uint64_t seed,
    int threads, int model_samples) {
  if (models.empty()) {
    throw ValidationError("pvalue_distribution_simulation: no event models");
  }
  if (iterations < 1) {
    throw DomainError("pvalue_distribution_simulation: iterations must be positive");
  }
  if (model_samples < 1) {
    throw DomainError("pvalue_distribution_simulation: model_samples must be positive");
  }
  const std::size_t total =
      models.size() * static_cast<std::size_t>(iterations);
  std::vector<double> pvalues(total);

  auto run_pair = [&](std::size_t index) {
    const std::size_t e = index / static_cast<std::size_t>(iterations);
    const std::size_t it = index % static_cast<std::size_t>(iterations);
    const EventModel& model = models[e];
    RngStream rng = RngStream::derive(seed, {e, it});
    std::vector<double> scores(static_cast<std::size_t>(model.n_scores));
    for (double& s : scores) s = rng.normal(model.mu_s, model.sigma_s);
    std::vector<double> reference(static_cast<std::size_t>(model_samples));
    for (double& s : reference) s = rng.normal(model.mu_s, model.sigma_s);
    const double d = ks_statistic(scores, reference);
    pvalues[index] = ks_pvalue(d, scores.size(), reference.size());
  };

  const int workers = std::max(1, threads);
  if (workers == 1) {
    for (std::size_t index = 0; index < total; ++index) run_pair(index);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t index = static_cast<std::size_t>(w); index < total;
             index += static_cast<std::size_t>(workers)) {
          run_pair(index);
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  return pvalues;
}

}  // namespace golfstats
