#include "golfstats/stats.hpp"

#include <cmath>

#include "golfstats/errors.hpp"

namespace golfstats::stats {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kTwoPi = 6.283185307179586;
}  // namespace

double mean(std::span<const double> xs) {
  if (xs.empty()) {
    throw ValidationError("mean: empty sample");
  }
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

Moments moments(std::span<const double> xs) {
  const double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) {
    const double d = x - m;
    ss += d * d;
  }
  return {m, std::sqrt(ss / static_cast<double>(xs.size()))};
}

double population_stddev(std::span<const double> xs) {
  return moments(xs).stddev;
}

double normal_pdf(double x, double mu, double sigma) {
  if (sigma <= 0.0) {
    throw DomainError("normal_pdf: sigma must be positive");
  }
  const double t = (x - mu) / sigma;
  return std::exp(-0.5 * t * t) / (sigma * std::sqrt(kTwoPi));
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double normal_cdf(double x, double mu, double sigma) {
  if (sigma <= 0.0) {
    throw DomainError("normal_cdf: sigma must be positive");
  }
  return normal_cdf((x - mu) / sigma);
}

LinearFit ols_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw ValidationError("ols_fit: size mismatch");
  }
  if (x.size() < 2) {
    throw DomainError("ols_fit: need at least 2 points");
  }
  const double xm = mean(x);
  const double ym = mean(y);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - xm;
    sxx += dx * dx;
    sxy += dx * (y[i] - ym);
  }
  if (sxx == 0.0) {
    throw DomainError("degenerate regression: all abscissa values coincide");
  }
  const double slope = sxy / sxx;
  return {slope, ym - slope * xm};
}

}  // namespace golfstats::stats
