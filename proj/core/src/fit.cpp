#include "cyclia/fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace cyclia {

LinearFit least_squares(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("least_squares: size mismatch");
  LinearFit f;
  f.points = x.size();
  if (x.empty()) return f;
  double mx = 0.0, my = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    mx += x[k];
    my += y[k];
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxx += (x[k] - mx) * (x[k] - mx);
    sxy += (x[k] - mx) * (y[k] - my);
  }
  f.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  f.intercept = my - f.slope * mx;
  double lo = 0.0, hi = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    double r = y[k] - f.intercept - f.slope * x[k];
    if (k == 0 || r < lo) lo = r;
    if (k == 0 || r > hi) hi = r;
  }
  f.residual_spread = hi - lo;
  return f;
}

double log_trend_slope(std::span<const double> t, std::span<const double> value, double floor) {
  if (t.size() != value.size()) throw std::invalid_argument("log_trend_slope: size mismatch");
  if (std::all_of(value.begin(), value.end(), [&](double v) { return v <= floor; })) return 0.0;
  std::vector<double> x(t.size()), y(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    x[k] = -std::log1p(-t[k]);
    y[k] = std::log(std::max(value[k], floor));
  }
  return least_squares(x, y).slope;
}

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 16) {
    double s = 0.0;
    for (double a : v) s += a;
    return s;
  }
  const std::size_t h = v.size() / 2;
  return pairwise_sum(v.first(h)) + pairwise_sum(v.subspan(h));
}

}  // namespace cyclia
