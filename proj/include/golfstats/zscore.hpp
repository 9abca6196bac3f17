#pragma once

#include <span>
#include <string>
#include <vector>

#include "golfstats/score_model.hpp"
#include "golfstats/stats.hpp"

namespace golfstats {

// Sign convention: lower score means negative z means better performance.
struct ZScore {
  std::string player_id;
  std::string event_id;
  int round_index = 1;
  Date date;
  double z = 0.0;
};

struct PlayerZProfile {
  std::string player_id;
  std::vector<ZScore> z_series;  // chronological
  double mu_z = 0.0;
  double sigma_z = 0.0;  // population convention
  double std_err = 0.0;  // sigma_z / sqrt(n)
  int n = 0;
};

// Linear trend over chronological observation index 0..n-1.
struct TrendFit {
  double slope = 0.0;  // per observation index
  double intercept = 0.0;
  double start_value = 0.0;  // fit at index 0
  double end_value = 0.0;    // fit at index n-1
  double delta = 0.0;        // end - start
};

struct RankedProfile {
  int money_rank = 0;  // 1 = top earner; 0 = unranked
  PlayerZProfile profile;
};

struct ImprovementEntry {
  std::string player_id;
  int money_rank = 0;
  TrendFit trend;
};

// z = (strokes - mu_s) / sigma_s for every round of the model's event.
// Throws DomainError("degenerate event") when sigma_s == 0.
std::vector<ZScore> round_zscores(const EventModel& model,
                                  std::span<const RoundScore> rounds);

// Aggregates a chronological z series; n = 1 degenerates to
// sigma_z = std_err = 0 rather than an error.
PlayerZProfile player_aggregate(std::vector<ZScore> z_series);

// OLS of sigma_s on mu_s across events, unweighted.
stats::LinearFit mu_sigma_regression(std::span<const EventModel> models);

// OLS of mu_z on money-list position, excluding the rank-1 player.
stats::LinearFit money_list_regression(std::span<const RankedProfile> profiles);

// OLS of z on observation index; start/end evaluated at the first and last
// index. Throws ValidationError when the profile has fewer than 2 rounds.
TrendFit trend_fit(const PlayerZProfile& profile);

// Players at money rank <= top_k_money, sorted by trend delta ascending
// (most improved first), ties broken by player_id. Players with fewer than
// two rounds carry no trend and are skipped.
std::vector<ImprovementEntry> most_improved(
    std::span<const RankedProfile> profiles, int top_k_money = 125);

// Pipeline: fit pooled per-event models, standardize every round, group by
// player, sort chronologically by (date, event_id, round_index). With
// per_round_standardization, moments come from each (event, round) slice
// instead of the pooled event.
std::vector<PlayerZProfile> build_player_profiles(
    std::span<const RoundScore> rounds, bool per_round_standardization = false);

}  // namespace golfstats
