#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "golfstats/errors.hpp"
#include "golfstats/stats.hpp"

namespace stats = golfstats::stats;

namespace {

// Independent oracle: Taylor series for erf, accurate to ~1e-14 for |x| <= 3.
double erf_series(double x) {
  const double two_over_sqrt_pi = 1.1283791670955126;
  double term = x;
  double sum = x;
  for (int n = 1; n < 120; ++n) {
    term *= -x * x / n;
    sum += term / (2 * n + 1);
    if (std::abs(term) < 1e-18) break;
  }
  return two_over_sqrt_pi * sum;
}

double cdf_oracle(double x) { return 0.5 * (1.0 + erf_series(x / std::sqrt(2.0))); }

// Composite Simpson quadrature oracle.
template <typename F>
double simpson(F f, double a, double b, int intervals) {
  const double h = (b - a) / intervals;
  double sum = f(a) + f(b);
  for (int i = 1; i < intervals; ++i) {
    sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return sum * h / 3.0;
}

}  // namespace

TEST_CASE("mean and population stddev") {
  const std::vector<double> xs{70.0, 72.0, 74.0};
  CHECK(stats::mean(xs) == doctest::Approx(72.0).epsilon(1e-15));
  CHECK(stats::population_stddev(xs) ==
        doctest::Approx(1.6329931618554521).epsilon(1e-13));
  const std::vector<double> flat{-0.5, -0.5};
  CHECK(stats::population_stddev(flat) == 0.0);
  CHECK_THROWS_AS(stats::mean(std::vector<double>{}),
                  golfstats::ValidationError);
}

TEST_CASE("normal_cdf matches the series oracle") {
  for (double x : {-3.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0}) {
    CHECK(std::abs(stats::normal_cdf(x) - cdf_oracle(x)) < 1e-13);
  }
  CHECK(stats::normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(stats::normal_cdf(70.8, 70.8, 2.6) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(stats::normal_cdf(0.0, 0.0, 0.0), golfstats::DomainError);
}

TEST_CASE("normal_pdf integrates to one over mu +- 10 sigma") {
  for (auto [mu, sigma] : std::vector<std::pair<double, double>>{
           {0.0, 1.0}, {70.8, 2.6}, {-4.0, 0.5}}) {
    const double integral = simpson(
        [mu = mu, sigma = sigma](double x) {
          return stats::normal_pdf(x, mu, sigma);
        },
        mu - 10.0 * sigma, mu + 10.0 * sigma, 20000);
    CHECK(std::abs(integral - 1.0) < 1e-9);
  }
  CHECK_THROWS_AS(stats::normal_pdf(0.0, 0.0, -1.0), golfstats::DomainError);
}

TEST_CASE("ols_fit recovers an exact line") {
  std::vector<double> x;
  std::vector<double> y;
  for (int i = 0; i < 45; ++i) {
    x.push_back(70.0 + 0.15 * i);
    y.push_back(-3.0 + 0.12 * x.back());
  }
  const stats::LinearFit fit = stats::ols_fit(x, y);
  CHECK(std::abs(fit.slope - 0.12) < 1e-12);
  CHECK(std::abs(fit.intercept + 3.0) < 1e-10);
}

TEST_CASE("ols_fit rejects degenerate input") {
  const std::vector<double> same{2.0, 2.0, 2.0};
  const std::vector<double> y{1.0, 2.0, 3.0};
  CHECK_THROWS_AS(stats::ols_fit(same, y), golfstats::DomainError);
  CHECK_THROWS_AS(stats::ols_fit(std::vector<double>{1.0}, std::vector<double>{1.0}),
                  golfstats::DomainError);
  CHECK_THROWS_AS(stats::ols_fit(std::vector<double>{1.0, 2.0}, y),
                  golfstats::ValidationError);
}
