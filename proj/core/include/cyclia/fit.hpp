#pragma once

#include <span>

namespace cyclia {

struct LinearFit {
  double intercept = 0.0;
  double slope = 0.0;
  double residual_spread = 0.0;  // max residual - min residual
  std::size_t points = 0;
};

// Ordinary least squares y = intercept + slope x. Fewer than two distinct x give slope 0.
LinearFit least_squares(std::span<const double> x, std::span<const double> y);

// Slope of log(value) against log(1/(1 - t)). Values at or below `floor` are treated as
// identically zero (slope 0) when every value is; otherwise they are clamped to `floor`.
double log_trend_slope(std::span<const double> t, std::span<const double> value, double floor = 1e-300);

// Pairwise (cascade) summation.
double pairwise_sum(std::span<const double> v);

}  // namespace cyclia
