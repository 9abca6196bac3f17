// golfstats command-line tool.
//
// Every pipeline stage is exposed as a subcommand emitting plot-ready CSV
// (or JSON with --format json). Stochastic commands take --seed; when the
// seed is omitted one is generated and printed to stderr, and every run can
// record a manifest (--manifest) from which `golfstats replay` reproduces
// the output bit for bit.
//
// Exit codes: 0 success, 1 I/O error, 2 validation error, 3 numeric/domain
// error.

#include <cstdio>
#include <cstdlib>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "golfstats/data_io.hpp"
#include "golfstats/errors.hpp"
#include "golfstats/gof.hpp"
#include "golfstats/score_model.hpp"
#include "golfstats/tournament.hpp"
#include "golfstats/version.hpp"
#include "golfstats/zscore.hpp"

namespace gs = golfstats;
using nlohmann::json;

namespace {

int run(const std::vector<std::string>& args);

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string fmt_hex64(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

int default_threads() {
  if (const char* env = std::getenv("GOLFSTATS_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Options shared by every subcommand.
struct CommonOpts {
  std::string output = "-";
  std::string format = "csv";
  std::string manifest;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("-o,--output", opts.output, "Output path ('-' = stdout)");
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--manifest", opts.manifest,
                  "Write a run manifest (JSON) to this path");
}

struct SeedOpt {
  std::uint64_t value = 0;
  CLI::Option* option = nullptr;

  void add(CLI::App* cmd) {
    option = cmd->add_option("--seed", value, "RNG seed (64-bit)");
  }

  // Returns the seed, generating and announcing one when not given.
  std::uint64_t resolve() {
    if (option != nullptr && option->count() > 0) return value;
    std::random_device rd;
    value = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    std::fprintf(stderr, "seed: %llu\n", static_cast<unsigned long long>(value));
    return value;
  }

  bool was_given() const { return option != nullptr && option->count() > 0; }
};

void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.output == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(opts.output, std::ios::binary);
  if (!out) {
    throw gs::IoError("cannot open '" + opts.output + "' for writing");
  }
  out << text;
}

// The run manifest records everything needed to reproduce an invocation:
// the resolved argv (with the seed made explicit), inputs, output and the
// full parameter map.
void write_manifest(const CommonOpts& opts, const std::string& command,
                    std::vector<std::string> argv,
                    std::optional<std::uint64_t> seed, bool seed_was_given,
                    const json& inputs, const json& parameters) {
  if (opts.manifest.empty()) return;
  if (seed && !seed_was_given) {
    argv.push_back("--seed");
    argv.push_back(std::to_string(*seed));
  }
  json manifest{
      {"tool", "golfstats"},
      {"version", gs::kVersion},
      {"command", command},
      {"argv", argv},
      {"seed", seed ? json(*seed) : json(nullptr)},
      {"inputs", inputs},
      {"output", opts.output},
      {"parameters", parameters},
  };
  std::ofstream out(opts.manifest);
  if (!out) {
    throw gs::IoError("cannot open '" + opts.manifest + "' for writing");
  }
  out << manifest.dump(2) << '\n';
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::size_t begin = 0;
  while (true) {
    const std::size_t colon = spec.find(':', begin);
    if (colon == std::string::npos) {
      parts.push_back(spec.substr(begin));
      break;
    }
    parts.push_back(spec.substr(begin, colon - begin));
    begin = colon + 1;
  }
  auto to_double = [&](const std::string& s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw gs::ValidationError("bad grid component '" + s + "' in '" + spec + "'");
    }
    return v;
  };
  if (parts.size() == 1) {
    return {to_double(parts[0])};
  }
  if (parts.size() != 3) {
    throw gs::ValidationError("grid must be 'value' or 'start:stop:step', got '" +
                              spec + "'");
  }
  const double start = to_double(parts[0]);
  const double stop = to_double(parts[1]);
  const double step = to_double(parts[2]);
  constexpr double kTol = 1e-9;
  if (step == 0.0) {
    if (std::abs(stop - start) <= kTol) return {start};
    throw gs::DomainError("grid step is zero but start != stop");
  }
  const double span = (stop - start) / step;
  if (span < -kTol) {
    throw gs::DomainError("grid step points away from stop in '" + spec + "'");
  }
  const long count = static_cast<long>(std::floor(span + kTol)) + 1;
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    grid.push_back(start + static_cast<double>(i) * step);
  }
  return grid;
}

std::vector<gs::SimPlayer> load_field_spec(const std::string& spec) {
  if (spec == "default") return gs::default_field();
  std::ifstream in(spec);
  if (!in) {
    throw gs::IoError("cannot open field spec '" + spec + "' for reading");
  }
  std::string line;
  long line_no = 0;
  if (!std::getline(in, line)) {
    throw gs::ValidationError(spec + ": empty field spec");
  }
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "player_id,mu_z,sigma_z") {
    throw gs::ValidationError(spec + ": bad header '" + line +
                              "', expected 'player_id,mu_z,sigma_z'");
  }
  std::vector<gs::SimPlayer> field;
  auto to_double = [&](const std::string& s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw gs::ValidationError(spec + ":" + std::to_string(line_no) +
                                ": bad number '" + s + "'");
    }
    return v;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t c1 = line.find(',');
    const std::size_t c2 = c1 == std::string::npos ? std::string::npos
                                                   : line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos ||
        line.find(',', c2 + 1) != std::string::npos) {
      throw gs::ValidationError(spec + ":" + std::to_string(line_no) +
                                ": expected 3 fields");
    }
    gs::SimPlayer p;
    p.player_id = line.substr(0, c1);
    p.mu_z = to_double(line.substr(c1 + 1, c2 - c1 - 1));
    p.sigma_z = to_double(line.substr(c2 + 1));
    if (p.sigma_z < 0.0) {
      throw gs::ValidationError(spec + ":" + std::to_string(line_no) +
                                ": sigma_z must be non-negative");
    }
    field.push_back(std::move(p));
  }
  if (field.empty()) {
    throw gs::ValidationError(spec + ": no players");
  }
  return field;
}

// Profiles joined with money ranks; players absent from the list get rank 0.
std::vector<gs::RankedProfile> ranked_profiles(
    const std::vector<gs::PlayerZProfile>& profiles,
    const std::vector<gs::MoneyListEntry>& money_list) {
  std::map<std::string, int> rank_of;
  for (const auto& e : money_list) rank_of[e.player_id] = e.rank;
  std::vector<gs::RankedProfile> ranked;
  ranked.reserve(profiles.size());
  for (const auto& p : profiles) {
    const auto it = rank_of.find(p.player_id);
    ranked.push_back({it == rank_of.end() ? 0 : it->second, p});
  }
  return ranked;
}

// ---------------------------------------------------------------------------
// Subcommand state and actions
// ---------------------------------------------------------------------------

struct FitCmd {
  CommonOpts common;
  std::string rounds_path;
  std::string event_id;

  void run(const std::vector<std::string>& argv) const {
    const auto rounds = gs::load_rounds(rounds_path);
    const gs::EventModel model = gs::fit_event(rounds, event_id);
    std::string text;
    if (common.format == "json") {
      text = json{{"event_id", model.event_id},
                  {"mu_s", model.mu_s},
                  {"sigma_s", model.sigma_s},
                  {"n_scores", model.n_scores}}
                 .dump(2) +
             "\n";
    } else {
      text = "event_id,mu_s,sigma_s,n_scores\n" + model.event_id + ',' +
             fmt_double(model.mu_s) + ',' + fmt_double(model.sigma_s) + ',' +
             std::to_string(model.n_scores) + "\n";
    }
    emit(common, text);
    write_manifest(common, "fit", argv, std::nullopt, false,
                   {{"rounds", rounds_path}},
                   {{"event", event_id}, {"format", common.format}});
  }
};

struct KsCmd {
  CommonOpts common;
  SeedOpt seed;
  std::string rounds_path;
  std::string event_id;
  int model_samples = gs::kDefaultModelSamples;

  void run(const std::vector<std::string>& argv) {
    const auto rounds = gs::load_rounds(rounds_path);
    const gs::EventModel model = gs::fit_event(rounds, event_id);
    const std::uint64_t s = seed.resolve();
    const auto reference =
        gs::sample_model(model.mu_s, model.sigma_s, model_samples, s);
    std::vector<int> scores;
    for (const auto& r : rounds) {
      if (r.event_id == event_id) scores.push_back(r.strokes);
    }
    const gs::KsResult ks = gs::event_ks_test(scores, reference);
    std::string text;
    if (common.format == "json") {
      text = json{{"event_id", event_id},
                  {"d_statistic", ks.d_statistic},
                  {"p_value", ks.p_value},
                  {"n1", ks.n1},
                  {"n2", ks.n2},
                  {"mu_s", model.mu_s},
                  {"sigma_s", model.sigma_s},
                  {"seed", s}}
                 .dump(2) +
             "\n";
    } else {
      text = "d_statistic,p_value,n1,n2\n" + fmt_double(ks.d_statistic) + ',' +
             fmt_double(ks.p_value) + ',' + std::to_string(ks.n1) + ',' +
             std::to_string(ks.n2) + "\n";
    }
    emit(common, text);
    write_manifest(common, "ks", argv, s, seed.was_given(),
                   {{"rounds", rounds_path}},
                   {{"event", event_id},
                    {"model_samples", model_samples},
                    {"format", common.format}});
  }
};

struct QqCmd {
  CommonOpts common;
  SeedOpt seed;
  std::string rounds_path;
  std::string event_id;
  int model_samples = gs::kDefaultModelSamples;
  bool dither = false;
  std::uint64_t dither_seed = 0;
  CLI::Option* dither_seed_opt = nullptr;

  void run(const std::vector<std::string>& argv) {
    const auto rounds = gs::load_rounds(rounds_path);
    const gs::EventModel model = gs::fit_event(rounds, event_id);
    const std::uint64_t s = seed.resolve();
    const auto reference =
        gs::sample_model(model.mu_s, model.sigma_s, model_samples, s);
    std::vector<double> data;
    for (const auto& r : rounds) {
      if (r.event_id == event_id) data.push_back(r.strokes);
    }
    std::vector<double> ref(reference.samples.begin(), reference.samples.end());
    std::optional<std::uint64_t> dseed;
    if (dither) {
      dseed = dither_seed_opt->count() > 0 ? dither_seed : gs::mix_seed(s, 0xD17);
    }
    const gs::QqSeries series = gs::qq_points(data, ref, dseed);
    std::string text;
    if (common.format == "json") {
      json points = json::array();
      for (const auto& [x, y] : series.points) points.push_back({x, y});
      text = json{{"event_id", event_id},
                  {"dithered", series.dithered},
                  {"dither_sigma", series.dither_sigma},
                  {"points", points}}
                 .dump(2) +
             "\n";
    } else {
      std::ostringstream out;
      out << "percent,data_quantile,model_quantile\n";
      for (std::size_t i = 0; i < series.points.size(); ++i) {
        out << (i + 1) << ',' << fmt_double(series.points[i].first) << ','
            << fmt_double(series.points[i].second) << '\n';
      }
      text = out.str();
    }
    emit(common, text);
    write_manifest(common, "qq", argv, s, seed.was_given(),
                   {{"rounds", rounds_path}},
                   {{"event", event_id},
                    {"model_samples", model_samples},
                    {"dither", dither},
                    {"format", common.format}});
  }
};

struct PvaluesCmd {
  CommonOpts common;
  SeedOpt seed;
  std::string rounds_path;
  int meta_iterations = 100;
  int model_samples = gs::kDefaultModelSamples;
  int threads = default_threads();

  void run(const std::vector<std::string>& argv) {
    const auto rounds = gs::load_rounds(rounds_path);
    const auto models = gs::fit_event_models(rounds);
    const std::uint64_t s = seed.resolve();
    const auto pvalues = gs::pvalue_distribution_simulation(
        models, meta_iterations, s, threads, model_samples);
    std::string text;
    if (common.format == "json") {
      json rows = json::array();
      for (std::size_t e = 0; e < models.size(); ++e) {
        for (int i = 0; i < meta_iterations; ++i) {
          rows.push_back({{"event_id", models[e].event_id},
                          {"iteration", i},
                          {"p_value",
                           pvalues[e * static_cast<std::size_t>(meta_iterations) +
                                   static_cast<std::size_t>(i)]}});
        }
      }
      text = json{{"seed", s}, {"rows", rows}}.dump(2) + "\n";
    } else {
      std::ostringstream out;
      out << "event_id,iteration,p_value\n";
      for (std::size_t e = 0; e < models.size(); ++e) {
        for (int i = 0; i < meta_iterations; ++i) {
          out << models[e].event_id << ',' << i << ','
              << fmt_double(
                     pvalues[e * static_cast<std::size_t>(meta_iterations) +
                             static_cast<std::size_t>(i)])
              << '\n';
        }
      }
      text = out.str();
    }
    emit(common, text);
    write_manifest(common, "pvalues", argv, s, seed.was_given(),
                   {{"rounds", rounds_path}},
                   {{"meta_iterations", meta_iterations},
                    {"model_samples", model_samples},
                    {"format", common.format}});
  }
};

struct ZscoresCmd {
  CommonOpts common;
  std::string rounds_path;
  bool per_round = false;

  void run(const std::vector<std::string>& argv) const {
    const auto rounds = gs::load_rounds(rounds_path);
    // Standardize in file order against pooled (or per-round) moments.
    std::map<std::string, gs::EventModel> models;
    std::map<std::pair<std::string, int>, gs::EventModel> round_models;
    if (!per_round) {
      for (auto& m : gs::fit_event_models(rounds)) models[m.event_id] = m;
    } else {
      std::map<std::pair<std::string, int>, std::vector<int>> slices;
      for (const auto& r : rounds) {
        slices[{r.event_id, r.round_index}].push_back(r.strokes);
      }
      for (const auto& [key, scores] : slices) {
        round_models[key] = gs::fit_moments(scores, key.first);
      }
    }
    auto z_of = [&](const gs::RoundScore& r) {
      const gs::EventModel& m = per_round
                                    ? round_models.at({r.event_id, r.round_index})
                                    : models.at(r.event_id);
      if (m.sigma_s <= 0.0) {
        throw gs::DomainError("degenerate event: sigma_s is zero for '" +
                              r.event_id + "'");
      }
      return (static_cast<double>(r.strokes) - m.mu_s) / m.sigma_s;
    };
    std::string text;
    if (common.format == "json") {
      json rows = json::array();
      for (const auto& r : rounds) {
        rows.push_back({{"player_id", r.player_id},
                        {"event_id", r.event_id},
                        {"round_index", r.round_index},
                        {"date", r.date.to_string()},
                        {"z", z_of(r)}});
      }
      text = json{{"rows", rows}}.dump(2) + "\n";
    } else {
      std::ostringstream out;
      out << "player_id,event_id,round_index,date,z\n";
      for (const auto& r : rounds) {
        out << r.player_id << ',' << r.event_id << ',' << r.round_index << ','
            << r.date.to_string() << ',' << fmt_double(z_of(r)) << '\n';
      }
      text = out.str();
    }
    emit(common, text);
    write_manifest(common, "zscores", argv, std::nullopt, false,
                   {{"rounds", rounds_path}},
                   {{"per_round", per_round}, {"format", common.format}});
  }
};

struct LeaderboardCmd {
  CommonOpts common;
  std::string rounds_path;
  std::string money_list_path;
  bool per_round = false;

  void run(const std::vector<std::string>& argv) const {
    const gs::Dataset ds = gs::load_dataset(rounds_path, {}, money_list_path);
    auto profiles = gs::build_player_profiles(ds.rounds, per_round);
    auto ranked = ranked_profiles(profiles, ds.money_list);
    std::sort(ranked.begin(), ranked.end(),
              [](const gs::RankedProfile& a, const gs::RankedProfile& b) {
                if (a.profile.mu_z != b.profile.mu_z) {
                  return a.profile.mu_z < b.profile.mu_z;
                }
                return a.profile.player_id < b.profile.player_id;
              });
    auto trend_of = [](const gs::PlayerZProfile& p) {
      return p.n >= 2 ? gs::trend_fit(p) : gs::TrendFit{};
    };
    std::string text;
    if (common.format == "json") {
      json rows = json::array();
      for (const auto& rp : ranked) {
        const gs::TrendFit t = trend_of(rp.profile);
        rows.push_back({{"player_id", rp.profile.player_id},
                        {"money_rank", rp.money_rank},
                        {"mu_z", rp.profile.mu_z},
                        {"sigma_z", rp.profile.sigma_z},
                        {"stderr", rp.profile.std_err},
                        {"n", rp.profile.n},
                        {"trend_slope", t.slope},
                        {"trend_delta", t.delta}});
      }
      text = json{{"rows", rows}}.dump(2) + "\n";
    } else {
      std::ostringstream out;
      out << "player_id,money_rank,mu_z,sigma_z,stderr,n,trend_slope,trend_delta\n";
      for (const auto& rp : ranked) {
        const gs::TrendFit t = trend_of(rp.profile);
        out << rp.profile.player_id << ',' << rp.money_rank << ','
            << fmt_double(rp.profile.mu_z) << ',' << fmt_double(rp.profile.sigma_z)
            << ',' << fmt_double(rp.profile.std_err) << ',' << rp.profile.n << ','
            << fmt_double(t.slope) << ',' << fmt_double(t.delta) << '\n';
      }
      text = out.str();
    }
    emit(common, text);
    write_manifest(common, "leaderboard", argv, std::nullopt, false,
                   {{"rounds", rounds_path}, {"money_list", money_list_path}},
                   {{"per_round", per_round}, {"format", common.format}});
  }
};

struct TrendCmd {
  CommonOpts common;
  std::string rounds_path;
  std::string money_list_path;
  std::string player_id;
  std::string rank_by = "delta";
  int top = 125;

  void run(const std::vector<std::string>& argv) const {
    const gs::Dataset ds = gs::load_dataset(rounds_path, {}, money_list_path);
    const auto profiles = gs::build_player_profiles(ds.rounds);
    std::string text;
    if (!player_id.empty()) {
      const auto it =
          std::find_if(profiles.begin(), profiles.end(),
                       [&](const auto& p) { return p.player_id == player_id; });
      if (it == profiles.end()) {
        throw gs::ValidationError("unknown player '" + player_id + "'");
      }
      const gs::TrendFit t = gs::trend_fit(*it);
      if (common.format == "json") {
        text = json{{"player_id", player_id},
                    {"mu_z", it->mu_z},
                    {"n", it->n},
                    {"slope", t.slope},
                    {"intercept", t.intercept},
                    {"start_value", t.start_value},
                    {"end_value", t.end_value},
                    {"delta", t.delta}}
                   .dump(2) +
               "\n";
      } else {
        text = "player_id,n,slope,intercept,start_value,end_value,delta\n" +
               player_id + ',' + std::to_string(it->n) + ',' +
               fmt_double(t.slope) + ',' + fmt_double(t.intercept) + ',' +
               fmt_double(t.start_value) + ',' + fmt_double(t.end_value) + ',' +
               fmt_double(t.delta) + "\n";
      }
    } else {
      if (ds.money_list.empty()) {
        throw gs::ValidationError(
            "trend ranking needs --money-list (or use --player)");
      }
      auto ranked = ranked_profiles(profiles, ds.money_list);
      auto entries = gs::most_improved(ranked, top);
      if (rank_by == "slope") {
        std::sort(entries.begin(), entries.end(),
                  [](const gs::ImprovementEntry& a, const gs::ImprovementEntry& b) {
                    if (a.trend.slope != b.trend.slope) {
                      return a.trend.slope < b.trend.slope;
                    }
                    return a.player_id < b.player_id;
                  });
      }
      if (common.format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < entries.size(); ++i) {
          const auto& e = entries[i];
          rows.push_back({{"rank", i + 1},
                          {"player_id", e.player_id},
                          {"money_rank", e.money_rank},
                          {"trend_delta", e.trend.delta},
                          {"trend_slope", e.trend.slope},
                          {"start_value", e.trend.start_value},
                          {"end_value", e.trend.end_value}});
        }
        text = json{{"rank_by", rank_by}, {"top", top}, {"rows", rows}}.dump(2) +
               "\n";
      } else {
        std::ostringstream out;
        out << "rank,player_id,money_rank,trend_delta,trend_slope,start_value,end_value\n";
        for (std::size_t i = 0; i < entries.size(); ++i) {
          const auto& e = entries[i];
          out << (i + 1) << ',' << e.player_id << ',' << e.money_rank << ','
              << fmt_double(e.trend.delta) << ',' << fmt_double(e.trend.slope)
              << ',' << fmt_double(e.trend.start_value) << ','
              << fmt_double(e.trend.end_value) << '\n';
        }
        text = out.str();
      }
    }
    emit(common, text);
    write_manifest(common, "trend", argv, std::nullopt, false,
                   {{"rounds", rounds_path}, {"money_list", money_list_path}},
                   {{"player", player_id},
                    {"rank_by", rank_by},
                    {"top", top},
                    {"format", common.format}});
  }
};

struct MoneyFitCmd {
  CommonOpts common;
  std::string rounds_path;
  std::string money_list_path;

  void run(const std::vector<std::string>& argv) const {
    const gs::Dataset ds = gs::load_dataset(rounds_path, {}, money_list_path);
    const auto profiles = gs::build_player_profiles(ds.rounds);
    auto ranked = ranked_profiles(profiles, ds.money_list);
    // Only ranked players enter the fit.
    std::erase_if(ranked, [](const gs::RankedProfile& p) { return p.money_rank == 0; });
    const gs::stats::LinearFit fit = gs::money_list_regression(ranked);
    std::string text;
    if (common.format == "json") {
      text = json{{"slope", fit.slope},
                  {"intercept", fit.intercept},
                  {"n_players", ranked.size()}}
                 .dump(2) +
             "\n";
    } else {
      text = "slope,intercept,n_players\n" + fmt_double(fit.slope) + ',' +
             fmt_double(fit.intercept) + ',' + std::to_string(ranked.size()) +
             "\n";
    }
    emit(common, text);
    write_manifest(common, "money-fit", argv, std::nullopt, false,
                   {{"rounds", rounds_path}, {"money_list", money_list_path}},
                   {{"format", common.format}});
  }
};

struct MuSigmaFitCmd {
  CommonOpts common;
  std::string rounds_path;

  void run(const std::vector<std::string>& argv) const {
    const auto rounds = gs::load_rounds(rounds_path);
    const auto models = gs::fit_event_models(rounds);
    const gs::stats::LinearFit fit = gs::mu_sigma_regression(models);
    std::string text;
    if (common.format == "json") {
      text = json{{"slope", fit.slope},
                  {"intercept", fit.intercept},
                  {"n_events", models.size()}}
                 .dump(2) +
             "\n";
    } else {
      text = "slope,intercept,n_events\n" + fmt_double(fit.slope) + ',' +
             fmt_double(fit.intercept) + ',' + std::to_string(models.size()) +
             "\n";
    }
    emit(common, text);
    write_manifest(common, "mu-sigma-fit", argv, std::nullopt, false,
                   {{"rounds", rounds_path}}, {{"format", common.format}});
  }
};

struct SimCmd {
  CommonOpts common;
  SeedOpt seed;
  std::string grid_spec = "-0.5:-2.5:-0.25";
  std::string field_spec = "default";
  double sigma_z = gs::kDefaultFictitiousSigmaZ;
  int careers = 10000;
  int tournaments = 300;
  int streak_k = gs::kDefaultStreakRecord;
  int threads = default_threads();

  void run(const std::vector<std::string>& argv) {
    const std::vector<double> grid = parse_grid(grid_spec);
    const std::vector<gs::SimPlayer> field = load_field_spec(field_spec);
    const std::uint64_t s = seed.resolve();
    gs::CareerParams params;
    params.careers = careers;
    params.tournaments = tournaments;
    params.streak_k = streak_k;
    params.threads = threads;
    const auto results = gs::sweep_mu_z(field, sigma_z, grid, params, s);
    const std::string hash = fmt_hex64(gs::field_hash(field));
    std::string text;
    if (common.format == "json") {
      json rows = json::array();
      for (const auto& r : results) {
        rows.push_back({{"mu_z", r.mu_z_fictitious},
                        {"win_probability", r.win_probability},
                        {"mc_stderr_win", r.mc_stderr_win},
                        {"prob_streak_ge_k", r.prob_streak_ge_k},
                        {"mc_stderr_streak", r.mc_stderr_streak},
                        {"careers", r.careers},
                        {"tournaments", r.tournaments_per_career},
                        {"k", r.k},
                        {"field_hash", hash},
                        {"seed", s}});
      }
      json metadata{
          {"sigma_z_fictitious", sigma_z},
          {"sigma_z_note",
           "assumed constant spread for the fictitious competitor; override "
           "with --sigma-z"},
          {"field_spec", field_spec},
          {"field_size", field.size()},
      };
      text = json{{"metadata", metadata}, {"rows", rows}}.dump(2) + "\n";
    } else {
      std::ostringstream out;
      out << "mu_z,win_probability,mc_stderr_win,prob_streak_ge_k,"
             "mc_stderr_streak,careers,tournaments,k,field_hash,seed\n";
      for (const auto& r : results) {
        out << fmt_double(r.mu_z_fictitious) << ','
            << fmt_double(r.win_probability) << ',' << fmt_double(r.mc_stderr_win)
            << ',' << fmt_double(r.prob_streak_ge_k) << ','
            << fmt_double(r.mc_stderr_streak) << ',' << r.careers << ','
            << r.tournaments_per_career << ',' << r.k << ',' << hash << ',' << s
            << '\n';
      }
      text = out.str();
    }
    emit(common, text);
    write_manifest(common, "sim", argv, s, seed.was_given(),
                   {{"field_spec", field_spec}},
                   {{"mu_z_grid", grid_spec},
                    {"sigma_z_fictitious", sigma_z},
                    {"sigma_z_note", "assumed, not fitted"},
                    {"careers", careers},
                    {"tournaments", tournaments},
                    {"streak_k", streak_k},
                    {"field_hash", hash},
                    {"format", common.format}});
  }
};

struct SynthEventCmd {
  CommonOpts common;
  SeedOpt seed;
  double mu = 70.8;
  double sigma = 2.6;
  int n_scores = 948;
  std::string event_id = "E1";
  int rounds_per_player = 6;

  void run(const std::vector<std::string>& argv) {
    const std::uint64_t s = seed.resolve();
    const auto rounds =
        gs::synth_event(mu, sigma, n_scores, s, event_id, rounds_per_player);
    if (common.output == "-") {
      std::ostringstream out;
      out << "event_id,player_id,round_index,date,strokes\n";
      for (const auto& r : rounds) {
        out << r.event_id << ',' << r.player_id << ',' << r.round_index << ','
            << r.date.to_string() << ',' << r.strokes << '\n';
      }
      emit(common, out.str());
    } else {
      gs::write_rounds(common.output, rounds);
    }
    write_manifest(common, "synth-event", argv, s, seed.was_given(), json::object(),
                   {{"mu", mu},
                    {"sigma", sigma},
                    {"n_scores", n_scores},
                    {"event_id", event_id},
                    {"rounds_per_player", rounds_per_player}});
  }
};

struct SynthSeasonCmd {
  CommonOpts common;
  SeedOpt seed;
  std::string out_dir = ".";
  gs::SeasonSpec spec;

  void run(const std::vector<std::string>& argv) {
    const std::uint64_t s = seed.resolve();
    const gs::Dataset ds = gs::synth_season(spec, s);
    const std::filesystem::path dir(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    gs::write_rounds(dir / "rounds.csv", ds.rounds);
    gs::write_events(dir / "events.csv", ds.events);
    gs::write_money_list(dir / "money_list.csv", ds.money_list);
    std::fprintf(stderr, "wrote %zu rounds, %zu events, %zu money-list rows to %s\n",
                 ds.rounds.size(), ds.events.size(), ds.money_list.size(),
                 dir.string().c_str());
    write_manifest(common, "synth-season", argv, s, seed.was_given(),
                   json::object(),
                   {{"out_dir", out_dir},
                    {"events", spec.events},
                    {"players", spec.players},
                    {"rounds_per_event", spec.rounds_per_event}});
  }
};

struct ReplayCmd {
  std::string manifest_path;

  int run() const {
    std::ifstream in(manifest_path);
    if (!in) {
      throw gs::IoError("cannot open manifest '" + manifest_path + "'");
    }
    json manifest;
    try {
      in >> manifest;
    } catch (const json::exception& e) {
      throw gs::ValidationError("bad manifest: " + std::string(e.what()));
    }
    if (!manifest.contains("argv") || !manifest["argv"].is_array()) {
      throw gs::ValidationError("bad manifest: missing argv array");
    }
    std::vector<std::string> argv;
    for (const auto& a : manifest["argv"]) argv.push_back(a.get<std::string>());
    return ::run(argv);
  }
};

int run(const std::vector<std::string>& args) {
  CLI::App app{"Gaussian score models, K-S validation, z-score analytics and "
               "Monte Carlo career simulation for stroke-play golf"};
  app.set_version_flag("--version", gs::kVersion);
  app.require_subcommand(1);

  auto fit = std::make_shared<FitCmd>();
  auto* fit_cmd = app.add_subcommand("fit", "Fit per-event score moments");
  fit_cmd->add_option("--rounds", fit->rounds_path, "rounds.csv")->required();
  fit_cmd->add_option("--event", fit->event_id, "Event id")->required();
  add_common(fit_cmd, fit->common);
  fit_cmd->callback([fit, &args] { fit->run(args); });

  auto ks = std::make_shared<KsCmd>();
  auto* ks_cmd =
      app.add_subcommand("ks", "K-S test of an event against its fitted model");
  ks_cmd->add_option("--rounds", ks->rounds_path, "rounds.csv")->required();
  ks_cmd->add_option("--event", ks->event_id, "Event id")->required();
  ks_cmd->add_option("--model-samples", ks->model_samples, "Model sample count")
      ->check(CLI::PositiveNumber);
  ks->seed.add(ks_cmd);
  add_common(ks_cmd, ks->common);
  ks_cmd->callback([ks, &args] { ks->run(args); });

  auto qq = std::make_shared<QqCmd>();
  auto* qq_cmd =
      app.add_subcommand("qq", "Quantile-quantile points, data vs model");
  qq_cmd->add_option("--rounds", qq->rounds_path, "rounds.csv")->required();
  qq_cmd->add_option("--event", qq->event_id, "Event id")->required();
  qq_cmd->add_option("--model-samples", qq->model_samples, "Model sample count")
      ->check(CLI::PositiveNumber);
  qq_cmd->add_flag("--dither", qq->dither,
                   "Add presentation-only Gaussian noise to emitted points");
  qq->dither_seed_opt =
      qq_cmd->add_option("--dither-seed", qq->dither_seed, "Dither RNG seed");
  qq->seed.add(qq_cmd);
  add_common(qq_cmd, qq->common);
  qq_cmd->callback([qq, &args] { qq->run(args); });

  auto pvalues = std::make_shared<PvaluesCmd>();
  auto* pvalues_cmd = app.add_subcommand(
      "pvalues", "Season-scale p-value self-consistency simulation");
  pvalues_cmd->add_option("--rounds", pvalues->rounds_path, "rounds.csv")
      ->required();
  pvalues_cmd->add_option("--meta-iterations", pvalues->meta_iterations,
                          "Season repetitions")
      ->check(CLI::PositiveNumber);
  pvalues_cmd
      ->add_option("--model-samples", pvalues->model_samples, "Model sample count")
      ->check(CLI::PositiveNumber);
  pvalues_cmd->add_option("--threads", pvalues->threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  pvalues->seed.add(pvalues_cmd);
  add_common(pvalues_cmd, pvalues->common);
  pvalues_cmd->callback([pvalues, &args] { pvalues->run(args); });

  auto zscores = std::make_shared<ZscoresCmd>();
  auto* zscores_cmd = app.add_subcommand("zscores", "Per-round z-scores");
  zscores_cmd->add_option("--rounds", zscores->rounds_path, "rounds.csv")
      ->required();
  zscores_cmd->add_flag("--per-round", zscores->per_round,
                        "Standardize each (event, round) slice separately");
  add_common(zscores_cmd, zscores->common);
  zscores_cmd->callback([zscores, &args] { zscores->run(args); });

  auto leaderboard = std::make_shared<LeaderboardCmd>();
  auto* leaderboard_cmd =
      app.add_subcommand("leaderboard", "Per-player aggregates sorted by mu_z");
  leaderboard_cmd->add_option("--rounds", leaderboard->rounds_path, "rounds.csv")
      ->required();
  leaderboard_cmd->add_option("--money-list", leaderboard->money_list_path,
                              "money_list.csv");
  leaderboard_cmd->add_flag("--per-round", leaderboard->per_round,
                            "Standardize each (event, round) slice separately");
  add_common(leaderboard_cmd, leaderboard->common);
  leaderboard_cmd->callback([leaderboard, &args] { leaderboard->run(args); });

  auto trend = std::make_shared<TrendCmd>();
  auto* trend_cmd = app.add_subcommand(
      "trend", "Chronological trend fits and most-improved ranking");
  trend_cmd->add_option("--rounds", trend->rounds_path, "rounds.csv")->required();
  trend_cmd->add_option("--money-list", trend->money_list_path, "money_list.csv");
  trend_cmd->add_option("--player", trend->player_id,
                        "Single player id (skips the ranking)");
  trend_cmd->add_option("--rank-by", trend->rank_by, "Ranking key")
      ->check(CLI::IsMember({"delta", "slope"}));
  trend_cmd->add_option("--top", trend->top, "Money-rank cutoff")
      ->check(CLI::PositiveNumber);
  add_common(trend_cmd, trend->common);
  trend_cmd->callback([trend, &args] { trend->run(args); });

  auto money_fit = std::make_shared<MoneyFitCmd>();
  auto* money_fit_cmd = app.add_subcommand(
      "money-fit", "OLS of mu_z on money rank, rank 1 excluded");
  money_fit_cmd->add_option("--rounds", money_fit->rounds_path, "rounds.csv")
      ->required();
  money_fit_cmd
      ->add_option("--money-list", money_fit->money_list_path, "money_list.csv")
      ->required();
  add_common(money_fit_cmd, money_fit->common);
  money_fit_cmd->callback([money_fit, &args] { money_fit->run(args); });

  auto mu_sigma = std::make_shared<MuSigmaFitCmd>();
  auto* mu_sigma_cmd = app.add_subcommand(
      "mu-sigma-fit", "OLS of event sigma_s on event mu_s");
  mu_sigma_cmd->add_option("--rounds", mu_sigma->rounds_path, "rounds.csv")
      ->required();
  add_common(mu_sigma_cmd, mu_sigma->common);
  mu_sigma_cmd->callback([mu_sigma, &args] { mu_sigma->run(args); });

  auto sim = std::make_shared<SimCmd>();
  auto* sim_cmd = app.add_subcommand(
      "sim", "Monte Carlo career sweep over fictitious-competitor mu_z");
  sim_cmd->add_option("--mu-z-grid", sim->grid_spec,
                      "Grid 'start:stop:step' or single value");
  sim_cmd->add_option("--field-spec", sim->field_spec,
                      "'default' or CSV (player_id,mu_z,sigma_z)");
  sim_cmd->add_option("--sigma-z", sim->sigma_z,
                      "Fictitious competitor sigma_z (assumption)");
  sim_cmd->add_option("--careers", sim->careers, "Careers per grid point")
      ->check(CLI::PositiveNumber);
  sim_cmd->add_option("--tournaments", sim->tournaments, "Tournaments per career")
      ->check(CLI::PositiveNumber);
  sim_cmd->add_option("--streak-k", sim->streak_k, "Consecutive-win threshold")
      ->check(CLI::PositiveNumber);
  sim_cmd->add_option("--threads", sim->threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  sim->seed.add(sim_cmd);
  add_common(sim_cmd, sim->common);
  sim_cmd->callback([sim, &args] { sim->run(args); });

  auto synth_event = std::make_shared<SynthEventCmd>();
  auto* synth_event_cmd =
      app.add_subcommand("synth-event", "Generate one synthetic event");
  synth_event_cmd->add_option("--mu", synth_event->mu, "Mean strokes");
  synth_event_cmd->add_option("--sigma", synth_event->sigma, "Std dev, strokes")
      ->check(CLI::NonNegativeNumber);
  synth_event_cmd->add_option("--n", synth_event->n_scores, "Score count")
      ->check(CLI::PositiveNumber);
  synth_event_cmd->add_option("--event-id", synth_event->event_id, "Event id");
  synth_event_cmd->add_option("--rounds-per-player",
                              synth_event->rounds_per_player,
                              "Rounds assigned to each synthetic player")
      ->check(CLI::PositiveNumber);
  synth_event->seed.add(synth_event_cmd);
  add_common(synth_event_cmd, synth_event->common);
  synth_event_cmd->callback([synth_event, &args] { synth_event->run(args); });

  auto synth_season = std::make_shared<SynthSeasonCmd>();
  auto* synth_season_cmd =
      app.add_subcommand("synth-season", "Generate a synthetic season dataset");
  synth_season_cmd->add_option("--out-dir", synth_season->out_dir,
                               "Directory for rounds/events/money_list CSVs");
  synth_season_cmd->add_option("--events", synth_season->spec.events, "Event count")
      ->check(CLI::PositiveNumber);
  synth_season_cmd
      ->add_option("--players", synth_season->spec.players, "Player count")
      ->check(CLI::PositiveNumber);
  synth_season_cmd
      ->add_option("--rounds", synth_season->spec.rounds_per_event,
                   "Rounds per event")
      ->check(CLI::PositiveNumber);
  synth_season->seed.add(synth_season_cmd);
  add_common(synth_season_cmd, synth_season->common);
  synth_season_cmd->callback([synth_season, &args] { synth_season->run(args); });

  auto replay = std::make_shared<ReplayCmd>();
  auto* replay_cmd =
      app.add_subcommand("replay", "Re-run a recorded manifest bit for bit");
  replay_cmd->add_option("manifest", replay->manifest_path, "Manifest JSON path")
      ->required();
  int replay_rc = 0;
  replay_cmd->callback([replay, &replay_rc] { replay_rc = replay->run(); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  return replay_rc;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args;
  args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  try {
    return run(args);
  } catch (const gs::IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const gs::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const gs::DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
