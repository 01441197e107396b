#include "cyclia/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cyclia {

namespace {

std::size_t offset(int n) { return (std::size_t{1} << n) - 1; }

void require_generation(const DyadicMartingale& m, int n) {
  if (n < 0 || n > m.depth())
    throw std::out_of_range("generation " + std::to_string(n) + " exceeds martingale depth " +
                            std::to_string(m.depth()));
}

}  // namespace

DyadicInterval::DyadicInterval(int n, std::int64_t j) : generation(n), index(j) {
  if (n < 0 || n > 62) throw std::invalid_argument("dyadic generation out of range");
  if (j < 0 || j >= (std::int64_t{1} << n)) throw std::invalid_argument("dyadic index out of range");
}

double DyadicInterval::length() const { return std::ldexp(1.0, -generation); }
double DyadicInterval::left() const { return std::ldexp(static_cast<double>(index), -generation); }
double DyadicInterval::right() const { return std::ldexp(static_cast<double>(index + 1), -generation); }
bool DyadicInterval::contains(double x) const { return x >= left() && x < right(); }

std::pair<DyadicInterval, DyadicInterval> children(const DyadicInterval& interval) {
  return {DyadicInterval(interval.generation + 1, 2 * interval.index),
          DyadicInterval(interval.generation + 1, 2 * interval.index + 1)};
}

DyadicInterval parent(const DyadicInterval& interval) {
  if (interval.generation == 0) throw std::invalid_argument("the root has no parent");
  return DyadicInterval(interval.generation - 1, interval.index / 2);
}

DyadicInterval common_ancestor(const DyadicInterval& a, const DyadicInterval& b) {
  if (a.generation != b.generation) throw std::invalid_argument("common_ancestor: generation mismatch");
  int n = a.generation;
  std::int64_t i = a.index, j = b.index;
  while (i != j) {
    i >>= 1;
    j >>= 1;
    --n;
  }
  return DyadicInterval(n, i);
}

DyadicInterval interval_containing(double x, int generation) {
  double y = x - std::floor(x);
  auto j = static_cast<std::int64_t>(std::floor(std::ldexp(y, generation)));
  j = std::clamp<std::int64_t>(j, 0, (std::int64_t{1} << generation) - 1);
  return DyadicInterval(generation, j);
}

SmoothnessSequence::SmoothnessSequence(std::vector<double> beta) : beta_(std::move(beta)) {
  if (beta_.empty()) throw std::invalid_argument("smoothness sequence is empty");
  for (double b : beta_)
    if (!(b > 0.0)) throw std::invalid_argument("smoothness sequence entries must be positive");
}

double SmoothnessSequence::operator()(int n) const {
  if (n < 0 || n > depth()) throw std::out_of_range("smoothness sequence index out of range");
  return beta_[static_cast<std::size_t>(n)];
}

DyadicMartingale::DyadicMartingale(int depth, std::vector<double> values)
    : depth_(depth), values_(std::move(values)) {
  if (depth < 0 || depth > kMaxDepth)
    throw std::invalid_argument("martingale depth must lie in [0, " + std::to_string(kMaxDepth) + "]");
  if (values_.size() != offset(depth + 1)) throw std::invalid_argument("martingale value count mismatch");
}

DyadicMartingale DyadicMartingale::from_leaves(int depth, std::span<const double> leaf_values) {
  if (depth < 0 || depth > kMaxDepth) throw std::invalid_argument("martingale depth out of range");
  if (leaf_values.size() != (std::size_t{1} << depth)) throw std::invalid_argument("leaf count mismatch");
  std::vector<double> values(offset(depth + 1));
  std::copy(leaf_values.begin(), leaf_values.end(), values.begin() + static_cast<std::ptrdiff_t>(offset(depth)));
  for (int n = depth - 1; n >= 0; --n) {
    const std::size_t base = offset(n), child = offset(n + 1);
    for (std::size_t j = 0; j < (std::size_t{1} << n); ++j)
      values[base + j] = 0.5 * (values[child + 2 * j] + values[child + 2 * j + 1]);
  }
  return DyadicMartingale(depth, std::move(values));
}

double DyadicMartingale::value(const DyadicInterval& interval) const {
  return value(interval.generation, interval.index);
}

double DyadicMartingale::value(int n, std::int64_t j) const {
  require_generation(*this, n);
  if (j < 0 || j >= (std::int64_t{1} << n)) throw std::out_of_range("dyadic index out of range");
  return values_[offset(n) + static_cast<std::size_t>(j)];
}

std::span<const double> DyadicMartingale::generation(int n) const {
  require_generation(*this, n);
  return {values_.data() + offset(n), std::size_t{1} << n};
}

double DyadicMartingale::at(int n, double x) const { return value(interval_containing(x, n)); }

double DyadicMartingale::mean_value_defect() const {
  double worst = 0.0;
  for (int n = 0; n < depth_; ++n) {
    auto g = generation(n);
    auto c = generation(n + 1);
    for (std::size_t j = 0; j < g.size(); ++j) {
      double d = std::abs(g[j] - 0.5 * (c[2 * j] + c[2 * j + 1])) / (1.0 + std::abs(g[j]));
      worst = std::max(worst, d);
    }
  }
  return worst;
}

double square_function(const DyadicMartingale& m, int n, double x) {
  require_generation(m, n);
  double sum = 0.0;
  double prev = m.at(0, x);
  for (int k = 1; k <= n; ++k) {
    double cur = m.at(k, x);
    sum += (cur - prev) * (cur - prev);
    prev = cur;
  }
  return std::sqrt(sum);
}

double max_square(const DyadicMartingale& m, int n) {
  require_generation(m, n);
  std::vector<double> acc(1, 0.0);
  for (int k = 1; k <= n; ++k) {
    auto g = m.generation(k);
    auto p = m.generation(k - 1);
    std::vector<double> next(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
      double d = g[j] - p[j / 2];
      next[j] = acc[j / 2] + d * d;
    }
    acc.swap(next);
  }
  return std::sqrt(*std::max_element(acc.begin(), acc.end()));
}

SmoothnessCheck smoothness_check(const DyadicMartingale& m, const SmoothnessSequence& beta,
                                 std::size_t max_violations) {
  if (beta.depth() < m.depth()) throw std::invalid_argument("smoothness sequence shorter than martingale depth");
  SmoothnessCheck out;
  out.adjacent_ratio_by_generation.assign(static_cast<std::size_t>(m.depth()) + 1, 0.0);
  out.increment_ratio_by_generation.assign(static_cast<std::size_t>(m.depth()) + 1, 0.0);
  auto record = [&](const char* kind, int n, std::size_t j, double ratio) {
    if (ratio > 1.0) {
      out.pass = false;
      if (out.violations.size() < max_violations)
        out.violations.push_back({kind, DyadicInterval(n, static_cast<std::int64_t>(j)), ratio});
    }
  };
  for (int n = 1; n <= m.depth(); ++n) {
    const double b = beta(n);
    auto g = m.generation(n);
    auto p = m.generation(n - 1);
    double worst_adj = 0.0, worst_inc = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      std::size_t k = (j + 1) % g.size();
      double adj = (k == j) ? 0.0 : std::abs(g[j] - g[k]) / b;
      double inc = std::abs(g[j] - p[j / 2]) / (0.5 * b);
      worst_adj = std::max(worst_adj, adj);
      worst_inc = std::max(worst_inc, inc);
      record("adjacent", n, j, adj);
      record("increment", n, j, inc);
    }
    out.adjacent_ratio_by_generation[static_cast<std::size_t>(n)] = worst_adj;
    out.increment_ratio_by_generation[static_cast<std::size_t>(n)] = worst_inc;
    out.worst_adjacent_ratio = std::max(out.worst_adjacent_ratio, worst_adj);
    out.worst_increment_ratio = std::max(out.worst_increment_ratio, worst_inc);
  }
  return out;
}

double tail_distribution(const DyadicMartingale& m, int n, double s) {
  require_generation(m, n);
  if (!(s > 0.0)) throw std::invalid_argument("tail_distribution requires s > 0");
  const double m0 = m.value(0, 0);
  auto g = m.generation(n);
  std::size_t count = 0;
  for (double v : g)
    if (std::abs(v - m0) >= s) ++count;
  return std::ldexp(static_cast<double>(count), -n);
}

double concentration_bound(double a_n, double s) {
  if (a_n <= 0.0) return 0.0;
  return std::exp(-s * s / (2.0 * a_n * a_n));
}

ExpMoment exp_moment(const DyadicMartingale& m, int n, double alpha) {
  require_generation(m, n);
  if (!(alpha > 0.0)) throw std::invalid_argument("exp_moment requires alpha > 0");
  auto g = m.generation(n);
  double top = 0.0;
  for (double v : g) top = std::max(top, alpha * std::abs(v));
  ExpMoment out;
  if (top <= 700.0) {
    double sum = 0.0;
    for (double v : g) sum += std::exp(alpha * std::abs(v));
    out.value = std::ldexp(sum, -n);
    out.log_value = std::log(out.value);
  } else {
    double sum = 0.0;
    for (double v : g) sum += std::exp(alpha * std::abs(v) - top);
    out.log_value = top + std::log(sum) - n * std::log(2.0);
    out.value = out.log_value < 709.0 ? std::exp(out.log_value) : std::numeric_limits<double>::infinity();
  }
  const double a = max_square(m, n);
  if (a > 0.0) {
    out.log_bound_ratio = out.log_value - std::log(a) - 0.5 * alpha * alpha * a * a;
    out.bound_ratio = std::exp(out.log_bound_ratio);
  } else {
    out.log_bound_ratio = std::numeric_limits<double>::infinity();
    out.bound_ratio = std::numeric_limits<double>::infinity();
  }
  return out;
}

}  // namespace cyclia
