#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cyclia {

inline constexpr int kMaxDepth = 22;

// [j 2^-n, (j+1) 2^-n) on the circle parametrized by [0,1).
struct DyadicInterval {
  int generation = 0;
  std::int64_t index = 0;

  DyadicInterval() = default;
  DyadicInterval(int n, std::int64_t j);

  double length() const;
  double left() const;
  double right() const;
  bool contains(double x) const;

  friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;
};

std::pair<DyadicInterval, DyadicInterval> children(const DyadicInterval& interval);
DyadicInterval parent(const DyadicInterval& interval);
DyadicInterval common_ancestor(const DyadicInterval& a, const DyadicInterval& b);
DyadicInterval interval_containing(double x, int generation);

// Positive rule n -> beta_n, stored for generations 0..depth.
class SmoothnessSequence {
 public:
  explicit SmoothnessSequence(std::vector<double> beta);
  template <class Rule>
  static SmoothnessSequence from_rule(int depth, Rule rule) {
    std::vector<double> beta(static_cast<std::size_t>(depth) + 1);
    for (int n = 0; n <= depth; ++n) beta[static_cast<std::size_t>(n)] = rule(n);
    return SmoothnessSequence(std::move(beta));
  }

  double operator()(int n) const;
  int depth() const { return static_cast<int>(beta_.size()) - 1; }

 private:
  std::vector<double> beta_;
};

class DyadicMartingale {
 public:
  // Values in generation order: generation n occupies [2^n - 1, 2^{n+1} - 1).
  DyadicMartingale(int depth, std::vector<double> values);
  static DyadicMartingale from_leaves(int depth, std::span<const double> leaf_values);

  int depth() const { return depth_; }
  double value(const DyadicInterval& interval) const;
  double value(int n, std::int64_t j) const;
  std::span<const double> generation(int n) const;
  double at(int n, double x) const;

  // max |M_I - (M_I1 + M_I2)/2| / (1 + |M_I|) over non-leaf nodes.
  double mean_value_defect() const;

 private:
  int depth_;
  std::vector<double> values_;
};

double square_function(const DyadicMartingale& m, int n, double x);
double max_square(const DyadicMartingale& m, int n);

struct SmoothnessViolation {
  std::string kind;  // "adjacent" or "increment"
  DyadicInterval cell;
  double ratio = 0.0;
};

struct SmoothnessCheck {
  double worst_adjacent_ratio = 0.0;
  double worst_increment_ratio = 0.0;
  std::vector<double> adjacent_ratio_by_generation;
  std::vector<double> increment_ratio_by_generation;
  std::vector<SmoothnessViolation> violations;  // capped
  bool pass = true;
};

SmoothnessCheck smoothness_check(const DyadicMartingale& m, const SmoothnessSequence& beta,
                                 std::size_t max_violations = 64);

double tail_distribution(const DyadicMartingale& m, int n, double s);
double concentration_bound(double a_n, double s);

struct ExpMoment {
  double value = 0.0;      // may be +inf when the log exceeds the double range
  double log_value = 0.0;
  double log_bound_ratio = 0.0;  // log of value / (A_n e^{alpha^2 A_n^2 / 2})
  double bound_ratio = 0.0;
};

ExpMoment exp_moment(const DyadicMartingale& m, int n, double alpha);

}  // namespace cyclia
