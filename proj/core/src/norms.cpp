#include "cyclia/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cyclia/fit.hpp"
#include "cyclia/parallel.hpp"

namespace cyclia {

LpaNorm lp_a_norm(const CoefficientVector& c, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("lp_a_norm: p must be positive");
  LpaNorm out;
  std::vector<double> terms;
  double alias = 0.0;
  for (std::size_t k = 0; k < c.c.size(); ++k) {
    terms.push_back(std::pow(std::abs(c.c[k]), p));
    if (k < c.alias_bound.size()) alias += std::pow(c.alias_bound[k], p);
  }
  const double s = pairwise_sum(terms);
  out.value = std::pow(s, 1.0 / p);
  out.tail_flag = alias > 1e-8 * std::max(s, 1e-300);
  return out;
}

double weighted_l2alpha(const CoefficientVector& c, double alpha) {
  std::vector<double> terms;
  for (std::size_t k = 0; k < c.c.size(); ++k)
    terms.push_back(std::norm(c.c[k]) * std::pow(1.0 + static_cast<double>(k), alpha));
  return std::sqrt(pairwise_sum(terms));
}

DiscIntegral besov_integral(const FunctionModel& f, double p, const QuadratureGrid& grid) {
  if (!(p >= 1.0)) throw std::invalid_argument("besov_seminorm: p must be at least 1");
  return disc_integral(grid, [&](const QuadratureRing& ring, std::vector<double>& out) {
    const RingJet jet = f.ring(ring.r, ring.samples);
    const double w = std::pow(1.0 - ring.r, p - 1.0);
    out.resize(ring.samples);
    for (std::size_t m = 0; m < ring.samples; ++m) out[m] = w * std::pow(std::abs(jet.derivative[m]), p);
  });
}

SeminormEstimate besov_seminorm(const FunctionModel& f, double p, const QuadratureGrid& grid) {
  const DiscIntegral coarse = besov_integral(f, p, grid);
  const DiscIntegral fine = besov_integral(f, p, grid.doubled());
  SeminormEstimate out;
  out.integral = fine.value;
  out.value = std::pow(fine.value, 1.0 / p);
  out.coarse_value = std::pow(coarse.value, 1.0 / p);
  out.tail_estimate = std::pow(fine.value + fine.tail_estimate, 1.0 / p) - out.value;
  out.error_estimate = std::abs(out.value - out.coarse_value) + out.tail_estimate;
  return out;
}

double besov_norm(const FunctionModel& f, double p, const QuadratureGrid& grid) {
  return besov_seminorm(f, p, grid).value + std::abs(f.eval(0.0));
}

double bloch_seminorm(const FunctionModel& f, const QuadratureGrid& grid) {
  const std::vector<QuadratureRing> rings = grid.rings();
  std::vector<double> best(rings.size(), 0.0);
  parallel_for(rings.size(), [&](std::size_t k) {
    const RingJet jet = f.ring(rings[k].r, rings[k].samples);
    double m = 0.0;
    for (const cplx& d : jet.derivative) m = std::max(m, std::abs(d));
    best[k] = m * (1.0 - rings[k].r);
  });
  double out = std::abs(f.deriv(0.0));
  for (double b : best) out = std::max(out, b);
  return out;
}

double hp_mean(const FunctionModel& f, double p, double r, std::size_t samples) {
  if (!(p > 0.0)) throw std::invalid_argument("hp_mean: p must be positive");
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("hp_mean: need 0 <= r < 1");
  const RingJet jet = f.ring(r, samples);
  std::vector<double> terms(samples);
  for (std::size_t m = 0; m < samples; ++m) terms[m] = std::pow(std::abs(jet.value[m]), p);
  return std::pow(pairwise_sum(terms) / static_cast<double>(samples), 1.0 / p);
}

std::vector<std::vector<double>> carleson_box_table(const FunctionModel& f, double p, int max_generation,
                                                    const QuadratureGrid& grid_in) {
  if (!(p >= 1.0)) throw std::invalid_argument("carleson box: p must be at least 1");
  if (max_generation < 0 || max_generation > 20) throw std::invalid_argument("carleson box: generation out of range");
  const double per_unit = 1.0 / grid_in.stretch;
  if (std::abs(per_unit - std::round(per_unit)) > 1e-12)
    throw std::invalid_argument("carleson box: grid stretch must divide 1 so boxes align with panels");
  QuadratureGrid grid = grid_in;
  const std::size_t cells = std::size_t{1} << max_generation;
  grid.min_samples = std::max(grid.min_samples, cells);
  grid.max_samples = std::max(grid.max_samples, cells);
  const std::vector<QuadratureRing> rings = grid.rings();

  // Weighted angular integral per ring and per finest cell.
  std::vector<std::vector<double>> ring_cells(rings.size(), std::vector<double>(cells, 0.0));
  parallel_for(rings.size(), [&](std::size_t k) {
    const QuadratureRing& ring = rings[k];
    const RingJet jet = f.ring(ring.r, ring.samples);
    const double w = std::pow(1.0 - ring.r, p - 1.0) * ring.weight * ring.r * 2.0 * std::numbers::pi /
                     static_cast<double>(ring.samples);
    const std::size_t per_cell = ring.samples / cells;
    std::vector<double> block(per_cell);
    for (std::size_t c = 0; c < cells; ++c) {
      for (std::size_t i = 0; i < per_cell; ++i)
        block[i] = std::pow(std::abs(jet.derivative[c * per_cell + i]), p);
      ring_cells[k][c] = w * pairwise_sum(block);
    }
  });

  // Box of generation n keeps the rings with u >= n (1 - r <= 2^{-n}).
  std::vector<std::vector<double>> table(static_cast<std::size_t>(max_generation) + 1);
  std::vector<double> acc(cells, 0.0);
  std::size_t next = rings.size();
  for (int n = max_generation; n >= 0; --n) {
    while (next > 0 && rings[next - 1].u >= n) {
      --next;
      for (std::size_t c = 0; c < cells; ++c) acc[c] += ring_cells[next][c];
    }
    const std::size_t count = std::size_t{1} << n, width = cells / count;
    auto& row = table[static_cast<std::size_t>(n)];
    row.assign(count, 0.0);
    for (std::size_t j = 0; j < count; ++j)
      row[j] = pairwise_sum(std::span<const double>(acc).subspan(j * width, width));
  }
  return table;
}

double carleson_box_measure(const FunctionModel& f, double p, const DyadicInterval& interval,
                            const QuadratureGrid& grid) {
  auto table = carleson_box_table(f, p, interval.generation, grid);
  return table[static_cast<std::size_t>(interval.generation)][static_cast<std::size_t>(interval.index)];
}

}  // namespace cyclia
