#pragma once

#include <string>
#include <vector>

#include "cyclia/measure.hpp"
#include "cyclia/smoothness.hpp"

namespace cyclia {

// Closed arc [a, b] with 0 <= a <= b <= 1 (a == b is a point).
struct Arc {
  double a = 0.0;
  double b = 0.0;
};

// Open complementary arc starting at `a` (mod 1); generation < 0 when untagged.
struct Gap {
  double a = 0.0;
  double length = 0.0;
  int generation = -1;
};

class IntervalSet {
 public:
  IntervalSet() = default;
  // Arcs must be pairwise disjoint; tags (optional) give the generation of the gap that
  // follows arc k, i.e. the gap between arc k and arc k+1 (cyclically).
  static IntervalSet from_arcs(std::vector<Arc> arcs, std::vector<int> gap_tags = {});
  static IntervalSet points(std::vector<double> xs);

  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<Gap>& gaps() const { return gaps_; }
  double arc_length() const;

 private:
  std::vector<Arc> arcs_;
  std::vector<Gap> gaps_;
};

struct EntropyReport {
  double total = 0.0;
  std::size_t gap_count = 0;
  std::vector<double> generation_subtotal;  // index = generation tag, empty if untagged
  double subtotal_ratio = 0.0;              // fitted geometric ratio of the subtotals
  SeriesVerdict verdict = SeriesVerdict::inconclusive;
  std::string note;
};

EntropyReport bc_entropy(const IntervalSet& e);
double measure_of_set(const CircleMeasure& mu, const IntervalSet& e);

}  // namespace cyclia
