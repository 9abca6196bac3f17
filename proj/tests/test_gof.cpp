#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "golfstats/errors.hpp"
#include "golfstats/gof.hpp"
#include "golfstats/rng.hpp"
#include "golfstats/score_model.hpp"

using namespace golfstats;

namespace {

// Brute-force oracle: evaluate both ECDFs on a fixed value grid and take
// the largest gap. Valid whenever both samples live on the grid.
double ks_oracle(const std::vector<double>& a, const std::vector<double>& b,
                 const std::vector<double>& grid) {
  double d = 0.0;
  for (double v : grid) {
    const auto below = [v](const std::vector<double>& xs) {
      double c = 0.0;
      for (double x : xs) c += x <= v ? 1.0 : 0.0;
      return c / static_cast<double>(xs.size());
    };
    d = std::max(d, std::abs(below(a) - below(b)));
  }
  return d;
}

// Direct summation oracle for the Kolmogorov tail.
double ks_tail_oracle(double lambda) {
  double sum = 0.0;
  for (int k = 1; k <= 1000; ++k) {
    const double term = 2.0 * std::exp(-2.0 * k * k * lambda * lambda);
    if (term < 1e-18) break;
    sum += (k % 2 == 1 ? term : -term);
  }
  return sum;
}

std::vector<double> draw_normals(RngStream& rng, int n, double mu, double sigma) {
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (double& x : xs) x = rng.normal(mu, sigma);
  return xs;
}

}  // namespace

TEST_CASE("ks_statistic hand cases") {
  const std::vector<double> abc{1, 2, 3};
  CHECK(ks_statistic(abc, abc) == 0.0);
  CHECK(ks_statistic(std::vector<double>{0, 0}, std::vector<double>{1, 1}) == 1.0);
  CHECK(ks_statistic(std::vector<double>{1, 2}, std::vector<double>{1, 2, 3}) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(ks_statistic(std::vector<double>{}, abc), ValidationError);
  CHECK_THROWS_AS(ks_statistic(abc, std::vector<double>{}), ValidationError);
}

TEST_CASE("ks_statistic is symmetric") {
  RngStream rng(404);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> a(20);
    std::vector<double> b(31);
    for (double& x : a) x = static_cast<double>(rng.pick(6));
    for (double& x : b) x = static_cast<double>(rng.pick(6));
    CHECK(ks_statistic(a, b) == ks_statistic(b, a));
  }
}

TEST_CASE("ks_statistic is invariant under strictly increasing transforms") {
  RngStream rng(405);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> a = draw_normals(rng, 40, 70.0, 3.0);
    std::vector<double> b = draw_normals(rng, 25, 71.0, 3.0);
    std::vector<double> ta(a);
    std::vector<double> tb(b);
    auto cube = [](double x) { return x * x * x; };
    std::transform(ta.begin(), ta.end(), ta.begin(), cube);
    std::transform(tb.begin(), tb.end(), tb.begin(), cube);
    CHECK(ks_statistic(a, b) == ks_statistic(ta, tb));
  }
}

TEST_CASE("ks_statistic matches exhaustive enumeration on tied lattices") {
  // all multisets of sizes 1..4 over {0,1,2}
  std::vector<std::vector<double>> samples;
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    while (true) {
      std::vector<double> s;
      for (int v : idx) s.push_back(v);
      if (std::is_sorted(s.begin(), s.end())) samples.push_back(s);
      int pos = n - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == 2) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int j = pos + 1; j < n; ++j) idx[static_cast<std::size_t>(j)] = 0;
    }
  }
  const std::vector<double> grid{0, 1, 2};
  for (const auto& a : samples) {
    for (const auto& b : samples) {
      CHECK(ks_statistic(a, b) == ks_oracle(a, b, grid));
    }
  }
}

TEST_CASE("ks_tail values and shape") {
  CHECK(std::abs(ks_tail(1.0) - ks_tail_oracle(1.0)) < 1e-10);
  CHECK(std::abs(ks_tail(1.0) - 0.2699996716773545) < 1e-9);
  CHECK(std::abs(ks_tail(1.0) - 0.27000) < 1e-4);
  CHECK(ks_tail(1e-11) == 1.0);
  CHECK(ks_tail(0.05) == doctest::Approx(1.0).epsilon(1e-9));
  double prev = 1.0;
  for (double lambda = 0.3; lambda <= 3.0; lambda += 0.1) {
    const double q = ks_tail(lambda);
    CHECK(q < prev);  // strictly decreasing
    prev = q;
  }
}

TEST_CASE("ks_pvalue bounds and limits") {
  CHECK(ks_pvalue(0.0, 10, 10) == 1.0);
  CHECK(ks_pvalue(1.0, 1000, 1000) <= 1e-12);
  CHECK(ks_pvalue(1.0, 1000, 1000) >= 0.0);
  CHECK_THROWS_AS(ks_pvalue(-0.1, 10, 10), DomainError);
  CHECK_THROWS_AS(ks_pvalue(1.1, 10, 10), DomainError);
  CHECK_THROWS_AS(ks_pvalue(0.5, 0, 10), DomainError);
}

TEST_CASE("p-values are roughly uniform for same-distribution samples") {
  RngStream rng(777);
  int below = 0;
  const int trials = 500;
  for (int t = 0; t < trials; ++t) {
    const auto a = draw_normals(rng, 200, 0.0, 1.0);
    const auto b = draw_normals(rng, 200, 0.0, 1.0);
    const KsResult r = two_sample_ks(a, b);
    if (r.p_value < 0.05) ++below;
  }
  const double frac = static_cast<double>(below) / trials;
  CHECK(frac >= 0.02);
  CHECK(frac <= 0.09);
}

TEST_CASE("qq_points hand cases") {
  const std::vector<double> v{1, 2, 3, 4};
  const QqSeries series = qq_points(v, v);
  REQUIRE(series.points.size() == 100);
  CHECK_FALSE(series.dithered);
  for (const auto& [x, y] : series.points) CHECK(x == y);
  // left-continuous inverse ECDF: the 50% level of {1,2,3,4} is 2
  CHECK(series.points[49].first == 2.0);
  CHECK(series.points[0].first == 1.0);    // 1% level
  CHECK(series.points[99].first == 4.0);   // 100% level

  CHECK_THROWS_AS(qq_points(std::vector<double>{}, v), ValidationError);
}

TEST_CASE("qq_points are monotone without dither") {
  RngStream rng(808);
  const auto a = draw_normals(rng, 500, 70.8, 2.6);
  const auto b = draw_normals(rng, 800, 70.5, 2.4);
  const QqSeries series = qq_points(a, b);
  for (std::size_t i = 1; i < series.points.size(); ++i) {
    CHECK(series.points[i].first >= series.points[i - 1].first);
    CHECK(series.points[i].second >= series.points[i - 1].second);
  }
}

TEST_CASE("dither is presentation-only noise of the stated size") {
  RngStream rng(809);
  const auto a = draw_normals(rng, 500, 70.8, 2.6);
  const auto b = draw_normals(rng, 800, 70.8, 2.6);
  const QqSeries plain = qq_points(a, b);
  const QqSeries dithered = qq_points(a, b, 555);
  CHECK(dithered.dithered);
  CHECK(dithered.dither_sigma == 0.2);
  REQUIRE(dithered.points.size() == plain.points.size());
  double sq_sum = 0.0;
  for (std::size_t i = 0; i < plain.points.size(); ++i) {
    const double dx = dithered.points[i].first - plain.points[i].first;
    const double dy = dithered.points[i].second - plain.points[i].second;
    sq_sum += dx * dx + dy * dy;
  }
  // RMS per-point displacement concentrates near 0.2 * sqrt(2)
  const double rms = std::sqrt(sq_sum / static_cast<double>(plain.points.size()));
  CHECK(rms == doctest::Approx(0.2 * std::sqrt(2.0)).epsilon(0.15));
  // same dither seed reproduces the same points
  const QqSeries again = qq_points(a, b, 555);
  CHECK(again.points == dithered.points);
}

TEST_CASE("event_ks_test degenerate and shifted cases") {
  const auto model = sample_model(70.8, 2.6, 2000, 13);
  const KsResult same = event_ks_test(model.samples, model);
  CHECK(same.d_statistic == 0.0);
  CHECK(same.p_value == 1.0);

  std::vector<int> shifted = model.samples;
  shifted.resize(500);
  for (int& s : shifted) s += 10;
  const KsResult far = event_ks_test(shifted, model);
  CHECK(far.p_value < 0.001);
  CHECK(far.n1 == 500);
  CHECK(far.n2 == 2000);
}

TEST_CASE("pvalue simulation counts and determinism") {
  std::vector<EventModel> models{{"E1", 70.8, 2.6, 120}, {"E2", 73.0, 3.1, 80},
                                 {"E3", 71.2, 2.2, 200}};
  const auto one = pvalue_distribution_simulation(
      std::vector<EventModel>{models[0]}, 1, 42, 1, 2000);
  CHECK(one.size() == 1);

  const auto serial = pvalue_distribution_simulation(models, 4, 42, 1, 2000);
  CHECK(serial.size() == 12);
  const auto threaded = pvalue_distribution_simulation(models, 4, 42, 3, 2000);
  CHECK(serial == threaded);
  for (double p : serial) {
    CHECK(p >= 0.0);
    CHECK(p <= 1.0);
  }
  CHECK_THROWS_AS(
      pvalue_distribution_simulation(std::vector<EventModel>{}, 1, 42),
      ValidationError);
  CHECK_THROWS_AS(pvalue_distribution_simulation(models, 0, 42), DomainError);
}
