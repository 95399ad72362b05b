#pragma once

#include <span>
#include <vector>

namespace abc {

double std_normal_pdf(double x);
double std_normal_log_pdf(double x);

// Phi(x) = 0.5 * erfc(-x / sqrt(2)); accurate to machine precision.
double std_normal_cdf(double x);

// Inverse of Phi via Wichura's PPND16 rational approximation
// (absolute error below 1e-15 over (0,1)).
double std_normal_quantile(double p);

// Linear-interpolation quantile of sorted data (h = p*(n-1) convention).
double quantile_sorted(std::span<const double> sorted, double p);

// Convenience: copies, sorts, interpolates.
double quantile(std::vector<double> values, double p);

// Ranks 1..n with ties sharing their average rank.
std::vector<double> average_ranks(std::span<const double> values);

double pearson_correlation(std::span<const double> x, std::span<const double> y);

// Mean and 1/n standard deviation.
double mean(std::span<const double> values);
double stddev_pop(std::span<const double> values);

}  // namespace abc
