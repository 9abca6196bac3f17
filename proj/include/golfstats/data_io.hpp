#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "golfstats/score_model.hpp"

namespace golfstats {

struct EventInfo {
  std::string event_id;
  std::string name;
  Date start_date;
};

struct MoneyListEntry {
  int rank = 0;
  std::string player_id;
};

struct Dataset {
  std::vector<RoundScore> rounds;
  std::vector<EventInfo> events;
  std::vector<MoneyListEntry> money_list;
};

// CSV schemas (exact headers, comma-separated, UTF-8, no quoting;
// identifiers restricted to [A-Za-z0-9_-], dates ISO-8601):
//   rounds.csv:     event_id,player_id,round_index,date,strokes
//   events.csv:     event_id,name,start_date
//   money_list.csv: rank,player_id
//
// Loaders throw IoError when the file cannot be read and ValidationError,
// with the offending line number, on malformed rows, duplicate
// (event, player, round) keys, or non-positive strokes. No silent coercion.
std::vector<RoundScore> load_rounds(const std::filesystem::path& path);
std::vector<EventInfo> load_events(const std::filesystem::path& path);
std::vector<MoneyListEntry> load_money_list(const std::filesystem::path& path);

void write_rounds(const std::filesystem::path& path,
                  std::span<const RoundScore> rounds);
void write_events(const std::filesystem::path& path,
                  std::span<const EventInfo> events);
void write_money_list(const std::filesystem::path& path,
                      std::span<const MoneyListEntry> entries);

// Loads and cross-validates: every round must reference a known event (when
// an events file is given) and money-list ranks must be unique and
// contiguous from 1. Empty paths skip the corresponding file.
Dataset load_dataset(const std::filesystem::path& rounds_path,
                     const std::filesystem::path& events_path = {},
                     const std::filesystem::path& money_list_path = {});

// n_scores rounds drawn from the discretized Gaussian N(mu, sigma^2),
// assigned to synthetic players P0001.. with up to rounds_per_player rounds
// each. Deterministic under seed.
std::vector<RoundScore> synth_event(double mu, double sigma, int n_scores,
                                    std::uint64_t seed,
                                    const std::string& event_id = "E1",
                                    int rounds_per_player = 6,
                                    Date start_date = {2007, 11, 28});

// Synthetic season generator for fixtures and demos. Player skill is
// uniform on [-skill_half_range, +skill_half_range] z units with a linear
// per-season drift; event difficulty mu is uniform on [mu_low, mu_high]
// and sigma follows sigma_base + sigma_slope * (mu - mid) plus jitter.
// The money list ranks players by mean standardized score.
struct SeasonSpec {
  int events = 46;
  int players = 200;
  int rounds_per_event = 4;
  double mu_low = 70.0;
  double mu_high = 76.0;
  double sigma_base = 2.8;
  double sigma_slope = 0.12;
  double sigma_jitter = 0.15;
  double skill_half_range = 0.23;
  double drift_half_range = 0.5;
  Date season_start = {2007, 1, 4};
};

Dataset synth_season(const SeasonSpec& spec, std::uint64_t seed);

}  // namespace golfstats
