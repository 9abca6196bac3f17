#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "golfstats/date.hpp"

namespace golfstats {

// One player's 18-hole total at one event round.
struct RoundScore {
  std::string event_id;
  std::string player_id;
  int round_index = 1;  // 1-based within the event
  Date date;
  int strokes = 0;
};

// Per-event Gaussian fit. Moments use the population (divisor-N)
// convention throughout.
struct EventModel {
  std::string event_id;
  double mu_s = 0.0;     // mean score, strokes
  double sigma_s = 0.0;  // population standard deviation, strokes
  int n_scores = 0;
};

struct DistributionBin {
  int score = 0;
  double probability = 0.0;
  double uncertainty = 0.0;  // sqrt(count) / total, Poisson estimate
};

// Integer-binned probability histogram of raw scores.
struct EmpiricalDistribution {
  std::vector<DistributionBin> bins;  // ascending by score
  long total_count = 0;
};

// Gaussian draws rounded to the nearest integer, halves away from zero.
struct DiscretizedGaussianModel {
  double mu = 0.0;
  double sigma = 0.0;
  std::uint64_t seed = 0;
  std::vector<int> samples;

  int n_samples() const { return static_cast<int>(samples.size()); }
};

inline constexpr int kDefaultModelSamples = 100000;

// Population mean / standard deviation of raw scores. Sums are accumulated
// in integers, so the variance is exact up to the final divisions.
// Throws ValidationError on fewer than two scores or a non-positive score.
EventModel fit_moments(std::span<const int> scores, std::string event_id = {});

// fit_moments over the rounds belonging to event_id.
EventModel fit_event(std::span<const RoundScore> rounds, const std::string& event_id);

// One model per distinct event id present, ordered by event id.
std::vector<EventModel> fit_event_models(std::span<const RoundScore> rounds);

// One bin per distinct score; probability = count/total,
// uncertainty = sqrt(count)/total. Throws ValidationError on empty input.
EmpiricalDistribution empirical_distribution(std::span<const int> scores);

// n_samples Gaussian draws rounded to the nearest integer; deterministic
// for a fixed seed. Throws DomainError on sigma < 0 or n_samples < 1.
DiscretizedGaussianModel sample_model(double mu, double sigma, int n_samples,
                                      std::uint64_t seed);

// P(round(N(mu, sigma^2)) == score), the analytic mass of the discretized
// model at one integer. Throws DomainError unless sigma > 0.
double discretized_pmf(double mu, double sigma, int score);

}  // namespace golfstats
