#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "golfstats/data_io.hpp"
#include "golfstats/errors.hpp"
#include "golfstats/gof.hpp"
#include "golfstats/score_model.hpp"
#include "golfstats/stats.hpp"
#include "golfstats/tournament.hpp"
#include "golfstats/version.hpp"
#include "golfstats/zscore.hpp"

namespace py = pybind11;
namespace gs = golfstats;

namespace {

// Profile built from a bare z series; order is taken as chronological.
gs::PlayerZProfile profile_from_series(const std::string& player_id,
                                       const std::vector<double>& zs) {
  std::vector<gs::ZScore> series;
  series.reserve(zs.size());
  int index = 1;
  for (double z : zs) {
    series.push_back({player_id, "", index++, gs::Date{}, z});
  }
  return gs::player_aggregate(std::move(series));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gaussian score models, K-S validation, z-score analytics and "
            "Monte Carlo career simulation for stroke-play golf";
  m.attr("__version__") = gs::kVersion;

  py::register_exception<gs::ValidationError>(m, "ValidationError",
                                              PyExc_ValueError);
  py::register_exception<gs::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<gs::IoError>(m, "IoError", PyExc_OSError);

  py::class_<gs::EventModel>(m, "EventModel")
      .def(py::init<>())
      .def(py::init([](std::string event_id, double mu_s, double sigma_s,
                       int n_scores) {
             return gs::EventModel{std::move(event_id), mu_s, sigma_s, n_scores};
           }),
           py::arg("event_id"), py::arg("mu_s"), py::arg("sigma_s"),
           py::arg("n_scores"))
      .def_readwrite("event_id", &gs::EventModel::event_id)
      .def_readwrite("mu_s", &gs::EventModel::mu_s)
      .def_readwrite("sigma_s", &gs::EventModel::sigma_s)
      .def_readwrite("n_scores", &gs::EventModel::n_scores)
      .def("__repr__", [](const gs::EventModel& m_) {
        return "EventModel(event_id='" + m_.event_id +
               "', mu_s=" + std::to_string(m_.mu_s) +
               ", sigma_s=" + std::to_string(m_.sigma_s) +
               ", n_scores=" + std::to_string(m_.n_scores) + ")";
      });

  py::class_<gs::DistributionBin>(m, "DistributionBin")
      .def_readonly("score", &gs::DistributionBin::score)
      .def_readonly("probability", &gs::DistributionBin::probability)
      .def_readonly("uncertainty", &gs::DistributionBin::uncertainty);

  py::class_<gs::EmpiricalDistribution>(m, "EmpiricalDistribution")
      .def_readonly("bins", &gs::EmpiricalDistribution::bins)
      .def_readonly("total_count", &gs::EmpiricalDistribution::total_count);

  py::class_<gs::DiscretizedGaussianModel>(m, "DiscretizedGaussianModel")
      .def_readonly("mu", &gs::DiscretizedGaussianModel::mu)
      .def_readonly("sigma", &gs::DiscretizedGaussianModel::sigma)
      .def_readonly("seed", &gs::DiscretizedGaussianModel::seed)
      .def_readonly("samples", &gs::DiscretizedGaussianModel::samples)
      .def_property_readonly("n_samples", &gs::DiscretizedGaussianModel::n_samples);

  py::class_<gs::KsResult>(m, "KsResult")
      .def_readonly("d_statistic", &gs::KsResult::d_statistic)
      .def_readonly("p_value", &gs::KsResult::p_value)
      .def_readonly("n1", &gs::KsResult::n1)
      .def_readonly("n2", &gs::KsResult::n2);

  py::class_<gs::QqSeries>(m, "QqSeries")
      .def_readonly("points", &gs::QqSeries::points)
      .def_readonly("dither_sigma", &gs::QqSeries::dither_sigma)
      .def_readonly("dithered", &gs::QqSeries::dithered);

  py::class_<gs::TrendFit>(m, "TrendFit")
      .def_readonly("slope", &gs::TrendFit::slope)
      .def_readonly("intercept", &gs::TrendFit::intercept)
      .def_readonly("start_value", &gs::TrendFit::start_value)
      .def_readonly("end_value", &gs::TrendFit::end_value)
      .def_readonly("delta", &gs::TrendFit::delta);

  py::class_<gs::stats::LinearFit>(m, "LinearFit")
      .def_readonly("slope", &gs::stats::LinearFit::slope)
      .def_readonly("intercept", &gs::stats::LinearFit::intercept);

  py::class_<gs::SimPlayer>(m, "SimPlayer")
      .def(py::init([](std::string player_id, double mu_z, double sigma_z) {
             return gs::SimPlayer{std::move(player_id), mu_z, sigma_z};
           }),
           py::arg("player_id"), py::arg("mu_z"), py::arg("sigma_z") = 1.0)
      .def_readwrite("player_id", &gs::SimPlayer::player_id)
      .def_readwrite("mu_z", &gs::SimPlayer::mu_z)
      .def_readwrite("sigma_z", &gs::SimPlayer::sigma_z);

  py::class_<gs::CareerSimResult>(m, "CareerSimResult")
      .def_readonly("mu_z_fictitious", &gs::CareerSimResult::mu_z_fictitious)
      .def_readonly("sigma_z_fictitious", &gs::CareerSimResult::sigma_z_fictitious)
      .def_readonly("win_probability", &gs::CareerSimResult::win_probability)
      .def_readonly("prob_streak_ge_k", &gs::CareerSimResult::prob_streak_ge_k)
      .def_readonly("k", &gs::CareerSimResult::k)
      .def_readonly("tournaments_per_career",
                    &gs::CareerSimResult::tournaments_per_career)
      .def_readonly("careers", &gs::CareerSimResult::careers)
      .def_readonly("mc_stderr_win", &gs::CareerSimResult::mc_stderr_win)
      .def_readonly("mc_stderr_streak", &gs::CareerSimResult::mc_stderr_streak);

  // score_model
  m.def(
      "fit_moments",
      [](const std::vector<int>& scores, const std::string& event_id) {
        return gs::fit_moments(scores, event_id);
      },
      py::arg("scores"), py::arg("event_id") = "");
  m.def(
      "empirical_distribution",
      [](const std::vector<int>& scores) {
        return gs::empirical_distribution(scores);
      },
      py::arg("scores"));
  m.def("sample_model", &gs::sample_model, py::arg("mu"), py::arg("sigma"),
        py::arg("n_samples") = gs::kDefaultModelSamples, py::arg("seed") = 0);
  m.def("discretized_pmf", &gs::discretized_pmf, py::arg("mu"), py::arg("sigma"),
        py::arg("score"));

  // gof
  m.def(
      "ks_statistic",
      [](const std::vector<double>& a, const std::vector<double>& b) {
        return gs::ks_statistic(a, b);
      },
      py::arg("a"), py::arg("b"));
  m.def("ks_pvalue", &gs::ks_pvalue, py::arg("d"), py::arg("n1"), py::arg("n2"));
  m.def("ks_tail", &gs::ks_tail, py::arg("lam"));
  m.def(
      "two_sample_ks",
      [](const std::vector<double>& a, const std::vector<double>& b) {
        return gs::two_sample_ks(a, b);
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "qq_points",
      [](const std::vector<double>& a, const std::vector<double>& b,
         std::optional<std::uint64_t> dither_seed, double dither_sigma) {
        return gs::qq_points(a, b, dither_seed, dither_sigma);
      },
      py::arg("a"), py::arg("b"), py::arg("dither_seed") = std::nullopt,
      py::arg("dither_sigma") = 0.2);
  m.def(
      "event_ks_test",
      [](const std::vector<int>& scores, const gs::DiscretizedGaussianModel& m_) {
        return gs::event_ks_test(scores, m_);
      },
      py::arg("scores"), py::arg("model"));
  m.def(
      "pvalue_distribution_simulation",
      [](const std::vector<gs::EventModel>& models, int iterations,
         std::uint64_t seed, int threads, int model_samples) {
        return gs::pvalue_distribution_simulation(models, iterations, seed,
                                                  threads, model_samples);
      },
      py::arg("models"), py::arg("iterations") = 100, py::arg("seed") = 0,
      py::arg("threads") = 1, py::arg("model_samples") = gs::kDefaultModelSamples);

  // zscore analytics (series-level surface; CSV pipelines live in the CLI)
  m.def(
      "zscores",
      [](const gs::EventModel& model, const std::vector<int>& scores) {
        if (model.sigma_s <= 0.0) {
          throw gs::DomainError("degenerate event: sigma_s must be positive");
        }
        std::vector<double> out;
        out.reserve(scores.size());
        for (int s : scores) out.push_back((s - model.mu_s) / model.sigma_s);
        return out;
      },
      py::arg("model"), py::arg("scores"));
  m.def(
      "player_aggregate",
      [](const std::string& player_id, const std::vector<double>& zs) {
        const gs::PlayerZProfile p = profile_from_series(player_id, zs);
        return py::dict(py::arg("player_id") = p.player_id,
                        py::arg("mu_z") = p.mu_z, py::arg("sigma_z") = p.sigma_z,
                        py::arg("stderr") = p.std_err, py::arg("n") = p.n);
      },
      py::arg("player_id"), py::arg("z_series"));
  m.def(
      "trend_fit",
      [](const std::vector<double>& zs) {
        return gs::trend_fit(profile_from_series("_", zs));
      },
      py::arg("z_series"));
  m.def(
      "mu_sigma_regression",
      [](const std::vector<gs::EventModel>& models) {
        return gs::mu_sigma_regression(models);
      },
      py::arg("models"));
  m.def(
      "money_list_regression",
      [](const std::vector<std::pair<int, double>>& rank_mu) {
        std::vector<gs::RankedProfile> profiles;
        profiles.reserve(rank_mu.size());
        for (const auto& [rank, mu_z] : rank_mu) {
          gs::RankedProfile p;
          p.money_rank = rank;
          p.profile.mu_z = mu_z;
          profiles.push_back(std::move(p));
        }
        return gs::money_list_regression(profiles);
      },
      py::arg("rank_mu_pairs"));

  // tournament simulation
  m.def("streak_probability_oracle", &gs::streak_probability_oracle,
        py::arg("p_win"), py::arg("n"), py::arg("k"));
  m.def("default_field", &gs::default_field);
  m.def(
      "simulate_career",
      [](const std::vector<gs::SimPlayer>& field, const gs::SimPlayer& fictitious,
         int tournaments, int careers, int k, std::uint64_t master_seed,
         int threads) {
        gs::CareerParams params;
        params.tournaments = tournaments;
        params.careers = careers;
        params.streak_k = k;
        params.threads = threads;
        return gs::simulate_career(field, fictitious, params, master_seed);
      },
      py::arg("field"), py::arg("fictitious"), py::arg("tournaments") = 300,
      py::arg("careers") = 10000, py::arg("k") = gs::kDefaultStreakRecord,
      py::arg("master_seed") = 0, py::arg("threads") = 1);
  m.def(
      "sweep_mu_z",
      [](const std::vector<gs::SimPlayer>& field, double sigma_z_fictitious,
         const std::vector<double>& grid, int tournaments, int careers, int k,
         std::uint64_t master_seed, int threads) {
        gs::CareerParams params;
        params.tournaments = tournaments;
        params.careers = careers;
        params.streak_k = k;
        params.threads = threads;
        return gs::sweep_mu_z(field, sigma_z_fictitious, grid, params,
                              master_seed);
      },
      py::arg("field"), py::arg("sigma_z_fictitious"), py::arg("mu_z_grid"),
      py::arg("tournaments") = 300, py::arg("careers") = 10000,
      py::arg("k") = gs::kDefaultStreakRecord, py::arg("master_seed") = 0,
      py::arg("threads") = 1);
  m.def(
      "field_hash",
      [](const std::vector<gs::SimPlayer>& field) {
        return gs::field_hash(field);
      },
      py::arg("field"));

  // synthetic data
  m.def(
      "synth_event_scores",
      [](double mu, double sigma, int n_scores, std::uint64_t seed) {
        std::vector<int> strokes;
        for (const auto& r : gs::synth_event(mu, sigma, n_scores, seed)) {
          strokes.push_back(r.strokes);
        }
        return strokes;
      },
      py::arg("mu"), py::arg("sigma"), py::arg("n_scores"), py::arg("seed") = 0);

  // shared numerics
  m.def("normal_cdf", py::overload_cast<double>(&gs::stats::normal_cdf),
        py::arg("x"));
  m.def("normal_pdf", &gs::stats::normal_pdf, py::arg("x"), py::arg("mu"),
        py::arg("sigma"));
}
