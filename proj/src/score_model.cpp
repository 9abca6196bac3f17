#include "golfstats/score_model.hpp"

#include <cmath>
#include <map>
#include <string>

#include "golfstats/errors.hpp"
#include "golfstats/rng.hpp"
#include "golfstats/stats.hpp"

namespace golfstats {

EventModel fit_moments(std::span<const int> scores, std::string event_id) {
  if (scores.size() < 2) {
    throw ValidationError("insufficient data: need at least 2 scores, got " +
                          std::to_string(scores.size()));
  }
  long long sum = 0;
  long long sum_sq = 0;
  for (int s : scores) {
    if (s <= 0) {
      throw ValidationError("invalid score: strokes must be positive, got " +
                            std::to_string(s));
    }
    sum += s;
    sum_sq += static_cast<long long>(s) * s;
  }
  const auto n = static_cast<long long>(scores.size());
  // n*sum_sq - sum^2 = n^2 * population variance, exact in 64-bit here.
  const double var_num = static_cast<double>(n * sum_sq - sum * sum);
  EventModel model;
  model.event_id = std::move(event_id);
  model.mu_s = static_cast<double>(sum) / static_cast<double>(n);
  model.sigma_s = std::sqrt(var_num) / static_cast<double>(n);
  model.n_scores = static_cast<int>(n);
  return model;
}

EventModel fit_event(std::span<const RoundScore> rounds,
                     const std::string& event_id) {
  std::vector<int> scores;
  for (const RoundScore& r : rounds) {
    if (r.event_id == event_id) scores.push_back(r.strokes);
  }
  if (scores.empty()) {
    throw ValidationError("unknown event: '" + event_id + "'");
  }
  return fit_moments(scores, event_id);
}

std::vector<EventModel> fit_event_models(std::span<const RoundScore> rounds) {
  std::map<std::string, std::vector<int>> by_event;
  for (const RoundScore& r : rounds) {
    by_event[r.event_id].push_back(r.strokes);
  }
  std::vector<EventModel> models;
  models.reserve(by_event.size());
  for (const auto& [event_id, scores] : by_event) {
    models.push_back(fit_moments(scores, event_id));
  }
  return models;
}

EmpiricalDistribution empirical_distribution(std::span<const int> scores) {
  if (scores.empty()) {
    throw ValidationError("empirical_distribution: empty input");
  }
  std::map<int, long> counts;
  for (int s : scores) ++counts[s];
  EmpiricalDistribution dist;
  dist.total_count = static_cast<long>(scores.size());
  const double total = static_cast<double>(dist.total_count);
  dist.bins.reserve(counts.size());
  for (const auto& [score, count] : counts) {
    dist.bins.push_back({score, static_cast<double>(count) / total,
                         std::sqrt(static_cast<double>(count)) / total});
  }
  return dist;
}

DiscretizedGaussianModel sample_model(double mu, double sigma, int n_samples,
                                      std::uint64_t seed) {
  if (sigma < 0.0) {
    throw DomainError("sample_model: sigma must be non-negative");
  }
  if (n_samples < 1) {
    throw DomainError("sample_model: n_samples must be positive");
  }
  DiscretizedGaussianModel model;
  model.mu = mu;
  model.sigma = sigma;
  model.seed = seed;
  model.samples.resize(static_cast<std::size_t>(n_samples));
  RngStream rng(seed);
  for (int& s : model.samples) {
    // llround rounds halves away from zero, the fixed rule for this model.
    s = static_cast<int>(std::llround(rng.normal(mu, sigma)));
  }
  return model;
}

double discretized_pmf(double mu, double sigma, int score) {
  if (sigma <= 0.0) {
    throw DomainError("discretized_pmf: sigma must be positive");
  }
  const double k = static_cast<double>(score);
  return stats::normal_cdf(k + 0.5, mu, sigma) -
         stats::normal_cdf(k - 0.5, mu, sigma);
}

}  // namespace golfstats
