#include "cyclia/support.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cyclia/fit.hpp"

namespace cyclia {

IntervalSet IntervalSet::from_arcs(std::vector<Arc> arcs, std::vector<int> gap_tags) {
  if (!gap_tags.empty() && gap_tags.size() != arcs.size())
    throw std::invalid_argument("IntervalSet: one gap tag per arc expected");
  std::vector<std::size_t> order(arcs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return arcs[i].a < arcs[j].a; });
  IntervalSet s;
  std::vector<int> tags;
  for (std::size_t i : order) {
    const Arc& c = arcs[i];
    if (!(0.0 <= c.a && c.a <= c.b && c.b <= 1.0)) throw std::invalid_argument("IntervalSet: arc outside [0,1]");
    if (!s.arcs_.empty() && s.arcs_.back().b >= c.a) throw std::invalid_argument("IntervalSet: arcs overlap");
    s.arcs_.push_back(c);
    tags.push_back(gap_tags.empty() ? -1 : gap_tags[i]);
  }
  if (s.arcs_.size() > 1 && s.arcs_.back().b - 1.0 >= s.arcs_.front().a)
    throw std::invalid_argument("IntervalSet: arcs overlap across 0");
  for (std::size_t k = 0; k < s.arcs_.size(); ++k) {
    const double start = s.arcs_[k].b;
    const double end = (k + 1 < s.arcs_.size()) ? s.arcs_[k + 1].a : s.arcs_.front().a + 1.0;
    const double len = end - start;
    if (len > 0.0) s.gaps_.push_back({start >= 1.0 ? start - 1.0 : start, len, tags[k]});
  }
  return s;
}

IntervalSet IntervalSet::points(std::vector<double> xs) {
  std::vector<Arc> arcs;
  for (double x : xs) {
    double y = x - std::floor(x);
    arcs.push_back({y, y});
  }
  return from_arcs(std::move(arcs));
}

double IntervalSet::arc_length() const {
  double s = 0.0;
  for (const Arc& c : arcs_) s += c.b - c.a;
  return s;
}

EntropyReport bc_entropy(const IntervalSet& e) {
  EntropyReport r;
  int top = -1;
  for (const Gap& g : e.gaps()) top = std::max(top, g.generation);
  if (top >= 0) r.generation_subtotal.assign(static_cast<std::size_t>(top) + 1, 0.0);
  for (const Gap& g : e.gaps()) {
    if (g.length <= 0.0) continue;
    const double term = g.length * std::log(1.0 / g.length);
    r.total += term;
    ++r.gap_count;
    if (g.generation >= 0) r.generation_subtotal[static_cast<std::size_t>(g.generation)] += term;
  }
  if (r.generation_subtotal.size() < 4) {
    r.verdict = SeriesVerdict::convergent;
    r.note = "finitely many gaps; the sum is finite";
    return r;
  }
  // Geometric ratio from the subtotals of generations 2..top-1: the deepest generation is
  // cut off by the truncation and the first ones carry start-up effects.
  std::vector<double> x, y;
  for (std::size_t j = 2; j + 1 < r.generation_subtotal.size(); ++j) {
    if (r.generation_subtotal[j] <= 0.0) continue;
    x.push_back(static_cast<double>(j));
    y.push_back(std::log(r.generation_subtotal[j]));
  }
  if (x.size() < 2) {
    r.verdict = SeriesVerdict::inconclusive;
    r.note = "too few tagged generations";
    return r;
  }
  r.subtotal_ratio = std::exp(least_squares(x, y).slope);
  if (r.subtotal_ratio < 0.98) {
    r.verdict = SeriesVerdict::convergent;
    r.note = "generation subtotals decay geometrically";
  } else if (r.subtotal_ratio >= 1.0) {
    r.verdict = SeriesVerdict::divergent;
    r.note = "generation subtotals do not decay";
  } else {
    r.verdict = SeriesVerdict::inconclusive;
    r.note = "generation subtotals decay too slowly to decide";
  }
  return r;
}

double measure_of_set(const CircleMeasure& mu, const IntervalSet& e) {
  double m = 0.0;
  for (const Arc& c : e.arcs()) m += mu.arc_mass(c.a, c.b - c.a, true);
  return m;
}

}  // namespace cyclia
