#pragma once

#include <span>

namespace golfstats::stats {

double mean(std::span<const double> xs);

// Population (divisor-N) standard deviation.
double population_stddev(std::span<const double> xs);

struct Moments {
  double mean = 0.0;
  double stddev = 0.0;  // population convention
};

Moments moments(std::span<const double> xs);

double normal_pdf(double x, double mu, double sigma);

// Standard normal CDF, computed as erfc(-x / sqrt(2)) / 2. The C library
// erfc is correctly rounded to a few ulp, far inside the 1e-12 absolute
// error this project needs.
double normal_cdf(double x);
double normal_cdf(double x, double mu, double sigma);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
};

// Unweighted ordinary least squares of y on x, centered sums.
// Throws DomainError when fewer than two points or all x coincide.
LinearFit ols_fit(std::span<const double> x, std::span<const double> y);

}  // namespace golfstats::stats
