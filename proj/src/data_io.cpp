#include "golfstats/data_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <tuple>

#include "golfstats/errors.hpp"
#include "golfstats/rng.hpp"

namespace golfstats {

namespace {

constexpr const char* kRoundsHeader = "event_id,player_id,round_index,date,strokes";
constexpr const char* kEventsHeader = "event_id,name,start_date";
constexpr const char* kMoneyHeader = "rank,player_id";

[[noreturn]] void fail_line(const std::filesystem::path& path, long line,
                            const std::string& what) {
  throw ValidationError(path.string() + ":" + std::to_string(line) + ": " + what);
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "' for reading");
  }
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  return out;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t begin = 0;
  while (true) {
    const std::size_t comma = line.find(',', begin);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(begin));
      return fields;
    }
    fields.push_back(line.substr(begin, comma - begin));
    begin = comma + 1;
  }
}

bool valid_identifier(const std::string& id) {
  if (id.empty()) return false;
  for (char c : id) {
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                    (c >= '0' && c <= '9') || c == '_' || c == '-';
    if (!ok) return false;
  }
  return true;
}

int parse_full_int(const std::string& text, const char* what,
                   const std::filesystem::path& path, long line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    fail_line(path, line, std::string(what) + " is not an integer: '" + text + "'");
  }
  return value;
}

// Reads a strict CSV: exact header, exact field count per row. Calls
// on_row(line_number, fields) for every data row.
template <typename OnRow>
void read_csv(const std::filesystem::path& path, const char* header,
              std::size_t n_fields, OnRow on_row) {
  std::ifstream in = open_input(path);
  std::string line;
  long line_no = 0;
  if (!std::getline(in, line)) {
    throw ValidationError(path.string() + ": empty file, expected header '" +
                          header + "'");
  }
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header) {
    throw ValidationError(path.string() + ": bad header '" + line +
                          "', expected '" + header + "'");
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() != n_fields) {
      fail_line(path, line_no,
                "expected " + std::to_string(n_fields) + " fields, got " +
                    std::to_string(fields.size()));
    }
    on_row(line_no, fields);
  }
}

}  // namespace

std::vector<RoundScore> load_rounds(const std::filesystem::path& path) {
  std::vector<RoundScore> rounds;
  std::set<std::tuple<std::string, std::string, int>> seen;
  read_csv(path, kRoundsHeader, 5,
           [&](long line, const std::vector<std::string>& f) {
             if (!valid_identifier(f[0])) fail_line(path, line, "bad event_id '" + f[0] + "'");
             if (!valid_identifier(f[1])) fail_line(path, line, "bad player_id '" + f[1] + "'");
             RoundScore r;
             r.event_id = f[0];
             r.player_id = f[1];
             r.round_index = parse_full_int(f[2], "round_index", path, line);
             if (r.round_index < 1) fail_line(path, line, "round_index must be >= 1");
             try {
               r.date = Date::parse(f[3]);
             } catch (const ValidationError& e) {
               fail_line(path, line, e.what());
             }
             r.strokes = parse_full_int(f[4], "strokes", path, line);
             if (r.strokes <= 0) fail_line(path, line, "strokes must be positive");
             if (!seen.emplace(r.event_id, r.player_id, r.round_index).second) {
               fail_line(path, line,
                         "duplicate (event_id, player_id, round_index) key (" +
                             r.event_id + ", " + r.player_id + ", " +
                             std::to_string(r.round_index) + ")");
             }
             rounds.push_back(std::move(r));
           });
  return rounds;
}

std::vector<EventInfo> load_events(const std::filesystem::path& path) {
  std::vector<EventInfo> events;
  std::set<std::string> seen;
  read_csv(path, kEventsHeader, 3,
           [&](long line, const std::vector<std::string>& f) {
             if (!valid_identifier(f[0])) fail_line(path, line, "bad event_id '" + f[0] + "'");
             if (!seen.insert(f[0]).second) {
               fail_line(path, line, "duplicate event_id '" + f[0] + "'");
             }
             EventInfo e;
             e.event_id = f[0];
             e.name = f[1];
             try {
               e.start_date = Date::parse(f[2]);
             } catch (const ValidationError& err) {
               fail_line(path, line, err.what());
             }
             events.push_back(std::move(e));
           });
  return events;
}

std::vector<MoneyListEntry> load_money_list(const std::filesystem::path& path) {
  std::vector<MoneyListEntry> entries;
  std::set<std::string> seen_players;
  read_csv(path, kMoneyHeader, 2,
           [&](long line, const std::vector<std::string>& f) {
             MoneyListEntry e;
             e.rank = parse_full_int(f[0], "rank", path, line);
             if (e.rank < 1) fail_line(path, line, "rank must be >= 1");
             if (!valid_identifier(f[1])) fail_line(path, line, "bad player_id '" + f[1] + "'");
             if (!seen_players.insert(f[1]).second) {
               fail_line(path, line, "duplicate player_id '" + f[1] + "'");
             }
             e.player_id = f[1];
             entries.push_back(std::move(e));
           });
  // Ranks must be unique and contiguous from 1.
  std::vector<int> ranks;
  ranks.reserve(entries.size());
  for (const auto& e : entries) ranks.push_back(e.rank);
  std::sort(ranks.begin(), ranks.end());
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i] != static_cast<int>(i) + 1) {
      throw ValidationError(path.string() +
                            ": money-list ranks must be unique and contiguous from 1");
    }
  }
  return entries;
}

void write_rounds(const std::filesystem::path& path,
                  std::span<const RoundScore> rounds) {
  std::ofstream out = open_output(path);
  out << kRoundsHeader << '\n';
  for (const RoundScore& r : rounds) {
    out << r.event_id << ',' << r.player_id << ',' << r.round_index << ','
        << r.date.to_string() << ',' << r.strokes << '\n';
  }
}

void write_events(const std::filesystem::path& path,
                  std::span<const EventInfo> events) {
  std::ofstream out = open_output(path);
  out << kEventsHeader << '\n';
  for (const EventInfo& e : events) {
    out << e.event_id << ',' << e.name << ',' << e.start_date.to_string() << '\n';
  }
}

void write_money_list(const std::filesystem::path& path,
                      std::span<const MoneyListEntry> entries) {
  std::ofstream out = open_output(path);
  out << kMoneyHeader << '\n';
  for (const MoneyListEntry& e : entries) {
    out << e.rank << ',' << e.player_id << '\n';
  }
}

Dataset load_dataset(const std::filesystem::path& rounds_path,
                     const std::filesystem::path& events_path,
                     const std::filesystem::path& money_list_path) {
  Dataset ds;
  ds.rounds = load_rounds(rounds_path);
  if (!events_path.empty()) {
    ds.events = load_events(events_path);
    std::set<std::string> known;
    for (const EventInfo& e : ds.events) known.insert(e.event_id);
    for (const RoundScore& r : ds.rounds) {
      if (!known.count(r.event_id)) {
        throw ValidationError("round references unknown event '" + r.event_id + "'");
      }
    }
  }
  if (!money_list_path.empty()) {
    ds.money_list = load_money_list(money_list_path);
  }
  return ds;
}

std::vector<RoundScore> synth_event(double mu, double sigma, int n_scores,
                                    std::uint64_t seed,
                                    const std::string& event_id,
                                    int rounds_per_player, Date start_date) {
  if (n_scores < 1) {
    throw DomainError("synth_event: n_scores must be positive");
  }
  if (rounds_per_player < 1) {
    throw DomainError("synth_event: rounds_per_player must be positive");
  }
  const DiscretizedGaussianModel model = sample_model(mu, sigma, n_scores, seed);
  std::vector<RoundScore> rounds;
  rounds.reserve(model.samples.size());
  char player[16];
  for (int i = 0; i < n_scores; ++i) {
    const int player_no = i / rounds_per_player + 1;
    const int round_index = i % rounds_per_player + 1;
    std::snprintf(player, sizeof(player), "P%04d", player_no);
    int strokes = model.samples[static_cast<std::size_t>(i)];
    if (strokes < 1) strokes = 1;  // scores are strictly positive by contract
    rounds.push_back({event_id, player, round_index,
                      start_date.plus_days(round_index - 1), strokes});
  }
  return rounds;
}

Dataset synth_season(const SeasonSpec& spec, std::uint64_t seed) {
  if (spec.events < 1 || spec.players < 2 || spec.rounds_per_event < 1) {
    throw DomainError("synth_season: need events >= 1, players >= 2, rounds >= 1");
  }
  Dataset ds;
  const double mu_mid = 0.5 * (spec.mu_low + spec.mu_high);

  struct EventParams {
    double mu;
    double sigma;
  };
  std::vector<EventParams> event_params(static_cast<std::size_t>(spec.events));
  for (int e = 0; e < spec.events; ++e) {
    RngStream rng = RngStream::derive(seed, {0, static_cast<std::uint64_t>(e)});
    const double mu = spec.mu_low + (spec.mu_high - spec.mu_low) * rng.uniform();
    double sigma = spec.sigma_base + spec.sigma_slope * (mu - mu_mid) +
                   rng.normal(0.0, spec.sigma_jitter);
    sigma = std::max(sigma, 1.0);
    event_params[static_cast<std::size_t>(e)] = {mu, sigma};
    char id[16];
    char name[32];
    std::snprintf(id, sizeof(id), "E%02d", e + 1);
    std::snprintf(name, sizeof(name), "Synthetic_Open_%02d", e + 1);
    ds.events.push_back({id, name, spec.season_start.plus_days(7L * e)});
  }

  struct PlayerParams {
    double skill;
    double drift;
  };
  std::vector<PlayerParams> player_params(static_cast<std::size_t>(spec.players));
  for (int p = 0; p < spec.players; ++p) {
    RngStream rng = RngStream::derive(seed, {1, static_cast<std::uint64_t>(p)});
    player_params[static_cast<std::size_t>(p)] = {
        spec.skill_half_range * (2.0 * rng.uniform() - 1.0),
        spec.drift_half_range * (2.0 * rng.uniform() - 1.0)};
  }

  std::vector<double> z_sum(static_cast<std::size_t>(spec.players), 0.0);
  std::vector<long> z_count(static_cast<std::size_t>(spec.players), 0);
  for (int e = 0; e < spec.events; ++e) {
    const EventParams& ep = event_params[static_cast<std::size_t>(e)];
    const double progress =
        spec.events > 1 ? static_cast<double>(e) / (spec.events - 1) : 0.5;
    for (int p = 0; p < spec.players; ++p) {
      const PlayerParams& pp = player_params[static_cast<std::size_t>(p)];
      const double skill_now = pp.skill + pp.drift * (progress - 0.5);
      RngStream rng = RngStream::derive(
          seed, {2, static_cast<std::uint64_t>(e), static_cast<std::uint64_t>(p)});
      char player[16];
      std::snprintf(player, sizeof(player), "P%03d", p + 1);
      for (int r = 1; r <= spec.rounds_per_event; ++r) {
        const double z_true = skill_now + rng.normal();
        const double raw = ep.mu + ep.sigma * z_true;
        int strokes = static_cast<int>(std::llround(raw));
        if (strokes < 1) strokes = 1;
        ds.rounds.push_back({ds.events[static_cast<std::size_t>(e)].event_id,
                             player, r,
                             ds.events[static_cast<std::size_t>(e)]
                                 .start_date.plus_days(r - 1),
                             strokes});
        z_sum[static_cast<std::size_t>(p)] += (strokes - ep.mu) / ep.sigma;
        ++z_count[static_cast<std::size_t>(p)];
      }
    }
  }

  // Money list: rank players by mean standardized score, best first.
  std::vector<std::pair<double, int>> order;
  order.reserve(static_cast<std::size_t>(spec.players));
  for (int p = 0; p < spec.players; ++p) {
    order.emplace_back(
        z_sum[static_cast<std::size_t>(p)] / static_cast<double>(z_count[static_cast<std::size_t>(p)]),
        p);
  }
  std::sort(order.begin(), order.end());
  for (int rank = 1; rank <= spec.players; ++rank) {
    char player[16];
    std::snprintf(player, sizeof(player), "P%03d",
                  order[static_cast<std::size_t>(rank - 1)].second + 1);
    ds.money_list.push_back({rank, player});
  }
  return ds;
}

}  // namespace golfstats
