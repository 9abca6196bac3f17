#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "golfstats/rng.hpp"

namespace golfstats {

struct SimPlayer {
  std::string player_id;
  double mu_z = 0.0;
  double sigma_z = 1.0;
};

struct TournamentConfig {
  std::vector<SimPlayer> field;
  int rounds = 4;
};

struct TournamentResult {
  std::size_t winner_index = 0;  // into config.field
  std::vector<double> totals;    // aligned with config.field
};

// One stroke-play tournament: `rounds` independent N(mu_z, sigma_z^2) draws
// per player in field order, lowest total wins. Ties, possible only through
// floating-point coincidence, are broken by a uniform pick among the tied
// leaders from the same stream.
TournamentResult simulate_tournament(const TournamentConfig& config,
                                     RngStream& rng);

struct CareerParams {
  int tournaments = 300;
  int careers = 10000;
  int streak_k = 11;
  int threads = 1;
};

struct CareerSimResult {
  double mu_z_fictitious = 0.0;
  double sigma_z_fictitious = 0.0;
  double win_probability = 0.0;   // per tournament, pooled over all careers
  double prob_streak_ge_k = 0.0;  // fraction of careers with a win run >= k
  int k = 11;
  int tournaments_per_career = 300;
  int careers = 10000;
  double mc_stderr_win = 0.0;
  double mc_stderr_streak = 0.0;
};

// Monte Carlo careers of `tournaments` events each, field plus one
// fictitious competitor drawn last. Career c draws only from the stream
// derived from (master_seed, c) and the reduction tallies integers, so the
// result is bit-identical for any thread count.
CareerSimResult simulate_career(std::span<const SimPlayer> field,
                                const SimPlayer& fictitious,
                                const CareerParams& params,
                                std::uint64_t master_seed);

// One career simulation per grid value; the master seed is reused across
// grid values (common random numbers), which makes win probabilities
// monotone in mu_z draw-for-draw.
std::vector<CareerSimResult> sweep_mu_z(std::span<const SimPlayer> field,
                                        double sigma_z_fictitious,
                                        std::span<const double> mu_z_grid,
                                        const CareerParams& params,
                                        std::uint64_t master_seed);

// Exact P(longest success run >= k in n iid Bernoulli(p) trials), by
// dynamic programming over (trial, trailing run length). Validates the
// Monte Carlo streak tabulation.
double streak_probability_oracle(double p_win, int n, int k);

// Synthetic money-list field: ranks 2..200 on the line
// mu_z(rank) = 0.0023 * (rank - 125) with sigma_z = 1, keeping the best 155
// players by mu_z.
std::vector<SimPlayer> default_field();

inline constexpr double kDefaultFictitiousSigmaZ = 0.85;
inline constexpr int kDefaultStreakRecord = 11;

// FNV-1a over the canonical field serialization; keys sweep output rows.
std::uint64_t field_hash(std::span<const SimPlayer> field);

}  // namespace golfstats
