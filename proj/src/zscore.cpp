#include "golfstats/zscore.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "golfstats/errors.hpp"

namespace golfstats {

std::vector<ZScore> round_zscores(const EventModel& model,
                                  std::span<const RoundScore> rounds) {
  if (model.sigma_s <= 0.0) {
    throw DomainError("degenerate event: sigma_s must be positive for '" +
                      model.event_id + "'");
  }
  std::vector<ZScore> zs;
  for (const RoundScore& r : rounds) {
    if (!model.event_id.empty() && r.event_id != model.event_id) continue;
    zs.push_back({r.player_id, r.event_id, r.round_index, r.date,
                  (static_cast<double>(r.strokes) - model.mu_s) / model.sigma_s});
  }
  return zs;
}

PlayerZProfile player_aggregate(std::vector<ZScore> z_series) {
  if (z_series.empty()) {
    throw ValidationError("player_aggregate: empty z series");
  }
  std::vector<double> values;
  values.reserve(z_series.size());
  for (const ZScore& z : z_series) values.push_back(z.z);
  const auto [mu, sigma] = stats::moments(values);
  PlayerZProfile profile;
  profile.player_id = z_series.front().player_id;
  profile.n = static_cast<int>(z_series.size());
  profile.mu_z = mu;
  profile.sigma_z = sigma;  // 0 for n = 1
  profile.std_err = sigma / std::sqrt(static_cast<double>(profile.n));
  profile.z_series = std::move(z_series);
  return profile;
}

stats::LinearFit mu_sigma_regression(std::span<const EventModel> models) {
  if (models.size() < 2) {
    throw ValidationError("mu_sigma_regression: need at least 2 events");
  }
  std::vector<double> mu;
  std::vector<double> sigma;
  mu.reserve(models.size());
  sigma.reserve(models.size());
  for (const EventModel& m : models) {
    mu.push_back(m.mu_s);
    sigma.push_back(m.sigma_s);
  }
  return stats::ols_fit(mu, sigma);
}

stats::LinearFit money_list_regression(
    std::span<const RankedProfile> profiles) {
  if (profiles.size() < 3) {
    throw ValidationError("money_list_regression: need at least 3 players");
  }
  std::vector<double> rank;
  std::vector<double> mu_z;
  for (const RankedProfile& p : profiles) {
    if (p.money_rank == 1) continue;  // the top earner is fitted around, not to
    rank.push_back(static_cast<double>(p.money_rank));
    mu_z.push_back(p.profile.mu_z);
  }
  if (rank.size() < 2) {
    throw ValidationError(
        "money_list_regression: fewer than 2 points after excluding rank 1");
  }
  return stats::ols_fit(rank, mu_z);
}

TrendFit trend_fit(const PlayerZProfile& profile) {
  if (profile.n < 2) {
    throw ValidationError("trend_fit: need at least 2 rounds, got " +
                          std::to_string(profile.n));
  }
  std::vector<double> index;
  std::vector<double> z;
  index.reserve(profile.z_series.size());
  z.reserve(profile.z_series.size());
  for (std::size_t i = 0; i < profile.z_series.size(); ++i) {
    index.push_back(static_cast<double>(i));
    z.push_back(profile.z_series[i].z);
  }
  const stats::LinearFit fit = stats::ols_fit(index, z);
  TrendFit trend;
  trend.slope = fit.slope;
  trend.intercept = fit.intercept;
  trend.start_value = fit.intercept;
  trend.end_value = fit.intercept + fit.slope * index.back();
  trend.delta = trend.end_value - trend.start_value;
  return trend;
}

std::vector<ImprovementEntry> most_improved(
    std::span<const RankedProfile> profiles, int top_k_money) {
  std::vector<ImprovementEntry> entries;
  for (const RankedProfile& p : profiles) {
    if (p.money_rank < 1 || p.money_rank > top_k_money) continue;
    if (p.profile.n < 2) continue;  // no trend without at least two rounds
    entries.push_back({p.profile.player_id, p.money_rank, trend_fit(p.profile)});
  }
  if (entries.empty()) {
    throw ValidationError("most_improved: no eligible players");
  }
  std::sort(entries.begin(), entries.end(),
            [](const ImprovementEntry& a, const ImprovementEntry& b) {
              if (a.trend.delta != b.trend.delta) {
                return a.trend.delta < b.trend.delta;
              }
              return a.player_id < b.player_id;
            });
  return entries;
}

std::vector<PlayerZProfile> build_player_profiles(
    std::span<const RoundScore> rounds, bool per_round_standardization) {
  std::map<std::string, std::vector<ZScore>> by_player;
  if (!per_round_standardization) {
    for (const EventModel& model : fit_event_models(rounds)) {
      for (ZScore& z : round_zscores(model, rounds)) {
        by_player[z.player_id].push_back(std::move(z));
      }
    }
  } else {
    // Standardize each (event, round_index) slice against its own moments.
    std::map<std::pair<std::string, int>, std::vector<RoundScore>> slices;
    for (const RoundScore& r : rounds) {
      slices[{r.event_id, r.round_index}].push_back(r);
    }
    for (const auto& [key, slice] : slices) {
      std::vector<int> scores;
      scores.reserve(slice.size());
      for (const RoundScore& r : slice) scores.push_back(r.strokes);
      const EventModel model = fit_moments(scores, key.first);
      for (ZScore& z : round_zscores(model, slice)) {
        by_player[z.player_id].push_back(std::move(z));
      }
    }
  }
  std::vector<PlayerZProfile> profiles;
  profiles.reserve(by_player.size());
  for (auto& [player_id, series] : by_player) {
    std::sort(series.begin(), series.end(),
              [](const ZScore& a, const ZScore& b) {
                return std::tie(a.date, a.event_id, a.round_index) <
                       std::tie(b.date, b.event_id, b.round_index);
              });
    profiles.push_back(player_aggregate(std::move(series)));
  }
  return profiles;
}

}  // namespace golfstats
