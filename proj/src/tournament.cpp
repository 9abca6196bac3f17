#include "golfstats/tournament.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <thread>

#include "golfstats/errors.hpp"

namespace golfstats {

namespace {

double binomial_stderr(double p, long long trials) {
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

// Winner of one tournament over `field` plus `fictitious` drawn last;
// avoids materializing totals. Reservoir tie-break keeps the pick uniform.
bool fictitious_wins(std::span<const SimPlayer> field,
                     const SimPlayer& fictitious, int rounds, RngStream& rng) {
  double best = 0.0;
  std::size_t tie_count = 0;
  bool best_is_fictitious = false;
  const std::size_t n = field.size() + 1;
  for (std::size_t i = 0; i < n; ++i) {
    const SimPlayer& player = i < field.size() ? field[i] : fictitious;
    double total = 0.0;
    for (int r = 0; r < rounds; ++r) {
      total += rng.normal(player.mu_z, player.sigma_z);
    }
    if (tie_count == 0 || total < best) {
      best = total;
      tie_count = 1;
      best_is_fictitious = (i == field.size());
    } else if (total == best) {
      ++tie_count;
      if (rng.pick(tie_count) == 0) {
        best_is_fictitious = (i == field.size());
      }
    }
  }
  return best_is_fictitious;
}

}  // namespace

TournamentResult simulate_tournament(const TournamentConfig& config,
                                     RngStream& rng) {
  if (config.field.empty()) {
    throw ValidationError("simulate_tournament: empty field");
  }
  if (config.rounds < 1) {
    throw DomainError("simulate_tournament: rounds must be positive");
  }
  for (const SimPlayer& p : config.field) {
    if (p.sigma_z < 0.0) {
      throw DomainError("simulate_tournament: sigma_z must be non-negative for '" +
                        p.player_id + "'");
    }
  }
  TournamentResult result;
  result.totals.reserve(config.field.size());
  for (const SimPlayer& p : config.field) {
    double total = 0.0;
    for (int r = 0; r < config.rounds; ++r) {
      total += rng.normal(p.mu_z, p.sigma_z);
    }
    result.totals.push_back(total);
  }
  std::size_t winner = 0;
  std::size_t tie_count = 1;
  for (std::size_t i = 1; i < result.totals.size(); ++i) {
    if (result.totals[i] < result.totals[winner]) {
      winner = i;
      tie_count = 1;
    } else if (result.totals[i] == result.totals[winner]) {
      ++tie_count;
      if (rng.pick(tie_count) == 0) {
        winner = i;
      }
    }
  }
  result.winner_index = winner;
  return result;
}

CareerSimResult simulate_career(std::span<const SimPlayer> field,
                                const SimPlayer& fictitious,
                                const CareerParams& params,
                                std::uint64_t master_seed) {
  if (field.empty()) {
    throw ValidationError("simulate_career: empty field");
  }
  if (params.tournaments < 1 || params.careers < 1 || params.streak_k < 1) {
    throw DomainError("simulate_career: tournaments, careers and streak_k must be positive");
  }
  if (fictitious.sigma_z < 0.0) {
    throw DomainError("simulate_career: fictitious sigma_z must be non-negative");
  }
  for (const SimPlayer& p : field) {
    if (p.sigma_z < 0.0) {
      throw DomainError("simulate_career: sigma_z must be non-negative for '" +
                        p.player_id + "'");
    }
  }

  const int rounds = 4;
  const int workers = std::max(1, params.threads);
  std::vector<long long> wins(static_cast<std::size_t>(workers), 0);
  std::vector<long long> streak_careers(static_cast<std::size_t>(workers), 0);

  auto run_chunk = [&](int w) {
    long long local_wins = 0;
    long long local_streaks = 0;
    for (int c = w; c < params.careers; c += workers) {
      RngStream rng =
          RngStream::derive(master_seed, {static_cast<std::uint64_t>(c)});
      int run = 0;
      int max_run = 0;
      for (int t = 0; t < params.tournaments; ++t) {
        if (fictitious_wins(field, fictitious, rounds, rng)) {
          ++local_wins;
          ++run;
          max_run = std::max(max_run, run);
        } else {
          run = 0;
        }
      }
      if (max_run >= params.streak_k) ++local_streaks;
    }
    wins[static_cast<std::size_t>(w)] = local_wins;
    streak_careers[static_cast<std::size_t>(w)] = local_streaks;
  };

  if (workers == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_chunk, w);
    for (auto& t : pool) t.join();
  }

  long long total_wins = 0;
  long long total_streaks = 0;
  for (int w = 0; w < workers; ++w) {
    total_wins += wins[static_cast<std::size_t>(w)];
    total_streaks += streak_careers[static_cast<std::size_t>(w)];
  }

  const long long tournament_trials =
      static_cast<long long>(params.careers) * params.tournaments;
  CareerSimResult result;
  result.mu_z_fictitious = fictitious.mu_z;
  result.sigma_z_fictitious = fictitious.sigma_z;
  result.k = params.streak_k;
  result.tournaments_per_career = params.tournaments;
  result.careers = params.careers;
  result.win_probability =
      static_cast<double>(total_wins) / static_cast<double>(tournament_trials);
  result.prob_streak_ge_k = static_cast<double>(total_streaks) /
                            static_cast<double>(params.careers);
  result.mc_stderr_win = binomial_stderr(result.win_probability, tournament_trials);
  result.mc_stderr_streak = binomial_stderr(result.prob_streak_ge_k, params.careers);
  return result;
}

std::vector<CareerSimResult> sweep_mu_z(std::span<const SimPlayer> field,
                                        double sigma_z_fictitious,
                                        std::span<const double> mu_z_grid,
                                        const CareerParams& params,
                                        std::uint64_t master_seed) {
  if (mu_z_grid.empty()) {
    throw ValidationError("sweep_mu_z: empty grid");
  }
  std::vector<CareerSimResult> results;
  results.reserve(mu_z_grid.size());
  for (double mu_z : mu_z_grid) {
    const SimPlayer fictitious{"FICT", mu_z, sigma_z_fictitious};
    results.push_back(simulate_career(field, fictitious, params, master_seed));
  }
  return results;
}

double streak_probability_oracle(double p_win, int n, int k) {
  if (p_win < 0.0 || p_win > 1.0) {
    throw DomainError("streak_probability_oracle: p_win must lie in [0, 1]");
  }
  if (n < 1 || k < 1 || k > n) {
    throw DomainError("streak_probability_oracle: need 1 <= k <= n");
  }
  // state[r] = P(no run of k yet, current trailing run length r), r < k.
  std::vector<double> state(static_cast<std::size_t>(k), 0.0);
  std::vector<double> next(static_cast<std::size_t>(k), 0.0);
  state[0] = 1.0;
  for (int t = 0; t < n; ++t) {
    double alive = 0.0;
    for (double s : state) alive += s;
    next[0] = alive * (1.0 - p_win);
    for (int r = k - 1; r >= 1; --r) {
      next[static_cast<std::size_t>(r)] =
          state[static_cast<std::size_t>(r - 1)] * p_win;
    }
    std::swap(state, next);
  }
  double alive = 0.0;
  for (double s : state) alive += s;
  return 1.0 - alive;
}

std::vector<SimPlayer> default_field() {
  std::vector<SimPlayer> players;
  players.reserve(199);
  for (int rank = 2; rank <= 200; ++rank) {
    char id[16];
    std::snprintf(id, sizeof(id), "R%03d", rank);
    players.push_back({id, 0.0023 * (rank - 125), 1.0});
  }
  std::stable_sort(players.begin(), players.end(),
                   [](const SimPlayer& a, const SimPlayer& b) {
                     return a.mu_z < b.mu_z;
                   });
  players.resize(155);
  return players;
}

std::uint64_t field_hash(std::span<const SimPlayer> field) {
  std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a 64 offset basis
  auto mix = [&h](const char* data, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) {
      h ^= static_cast<unsigned char>(data[i]);
      h *= 0x100000001b3ull;
    }
  };
  char buf[64];
  for (const SimPlayer& p : field) {
    mix(p.player_id.data(), p.player_id.size());
    const int len =
        std::snprintf(buf, sizeof(buf), "|%.17g|%.17g;", p.mu_z, p.sigma_z);
    mix(buf, static_cast<std::size_t>(len));
  }
  return h;
}

}  // namespace golfstats
