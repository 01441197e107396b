#include "cyclia/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cyclia/fit.hpp"
#include "cyclia/parallel.hpp"

namespace cyclia {

namespace {

template <unsigned N>
void gauss_rule(std::vector<double>& x, std::vector<double>& w) {
  using G = boost::math::quadrature::gauss<double, N>;
  const auto& a = G::abscissa();
  const auto& wt = G::weights();
  // Boost stores the nonnegative half of a symmetric rule.
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == 0.0) {
      x.push_back(0.0);
      w.push_back(wt[k]);
    } else {
      x.push_back(-a[k]);
      w.push_back(wt[k]);
      x.push_back(a[k]);
      w.push_back(wt[k]);
    }
  }
  std::vector<std::size_t> order(x.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return x[i] < x[j]; });
  std::vector<double> xs, ws;
  for (std::size_t k : order) {
    xs.push_back(x[k]);
    ws.push_back(w[k]);
  }
  x.swap(xs);
  w.swap(ws);
}

void legendre(int nodes, std::vector<double>& x, std::vector<double>& w) {
  switch (nodes) {
    case 4:
      gauss_rule<4>(x, w);
      break;
    case 8:
      gauss_rule<8>(x, w);
      break;
    case 16:
      gauss_rule<16>(x, w);
      break;
    case 32:
      gauss_rule<32>(x, w);
      break;
    default:
      throw std::invalid_argument("quadrature grid: nodes per panel must be 4, 8, 16 or 32");
  }
}

}  // namespace

QuadratureGrid QuadratureGrid::doubled() const {
  QuadratureGrid g = *this;
  g.stretch = stretch / 2.0;
  g.panels = panels * 2;
  g.angular_density = angular_density * 2.0;
  return g;
}

double QuadratureGrid::outer_radius() const { return 1.0 - std::exp2(-panels * stretch); }

std::size_t QuadratureGrid::samples_at(double r) const {
  const double want = angular_density / (1.0 - r);
  std::size_t m = 1;
  while (static_cast<double>(m) < want && m < max_samples) m <<= 1;
  return std::clamp(m, min_samples, max_samples);
}

std::vector<QuadratureRing> QuadratureGrid::rings() const {
  if (!(stretch > 0.0) || panels < 1) throw std::invalid_argument("quadrature grid: need stretch > 0, panels >= 1");
  if (min_samples < 1 || (min_samples & (min_samples - 1)) != 0 || (max_samples & (max_samples - 1)) != 0 ||
      min_samples > max_samples)
    throw std::invalid_argument("quadrature grid: sample bounds must be powers of two, min <= max");
  std::vector<double> x, w;
  legendre(nodes, x, w);
  std::vector<QuadratureRing> out;
  for (int k = 0; k < panels; ++k) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      QuadratureRing ring;
      ring.u = stretch * (k + 0.5 * (x[i] + 1.0));
      ring.r = -std::expm1(-ring.u * std::numbers::ln2);
      ring.weight = 0.5 * stretch * w[i] * std::numbers::ln2 * std::exp2(-ring.u);
      ring.samples = samples_at(ring.r);
      ring.panel = k;
      out.push_back(ring);
    }
  }
  return out;
}

DiscIntegral disc_integral(const QuadratureGrid& grid, const RingSampler& sampler) {
  const std::vector<QuadratureRing> rings = grid.rings();
  std::vector<double> ring_mean(rings.size());
  parallel_for(rings.size(), [&](std::size_t k) {
    std::vector<double> values;
    sampler(rings[k], values);
    if (values.size() != rings[k].samples) throw std::logic_error("disc_integral: sampler returned wrong count");
    ring_mean[k] = 2.0 * std::numbers::pi * pairwise_sum(values) / static_cast<double>(values.size()) * rings[k].r;
  });
  DiscIntegral out;
  std::vector<double> terms(rings.size());
  for (std::size_t k = 0; k < rings.size(); ++k) terms[k] = ring_mean[k] * rings[k].weight;
  out.value = pairwise_sum(terms);
  out.last_ring_mean = ring_mean.back();
  out.tail_estimate = ring_mean.back() * (1.0 - rings.back().r);
  return out;
}

}  // namespace cyclia
