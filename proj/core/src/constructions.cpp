#include "cyclia/constructions.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace cyclia {

namespace {

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

KahaneConstruction kahane_construction(const SmoothnessProfile& phi, int depth, std::uint64_t seed) {
  if (depth < 1 || depth > kMaxDepth) throw std::invalid_argument("kahane_smooth: depth must lie in [1, 22]");
  const double beta0 = phi.beta0(), c = phi.witness();
  KahaneConstruction out;
  out.amplitude_factor = 1.0 / (1.0 + (2.0 / c) / (std::exp2(1.0 - beta0) - 1.0));

  std::mt19937_64 rng(seed);
  // Nodal values at spacing 2^-(m) before step m; node count 2^m + 1 with f[last] = f[0].
  std::vector<double> f{1.0, 1.0, 1.0};
  for (int m = 1; m < depth; ++m) {
    std::vector<double> g(2 * (f.size() - 1) + 1);
    for (std::size_t k = 0; k + 1 < f.size(); ++k) {
      g[2 * k] = f[k];
      g[2 * k + 1] = 0.5 * (f[k] + f[k + 1]);
    }
    g.back() = f.back();
    const double amp = out.amplitude_factor * phi.of_log(m * std::numbers::ln2);
    // Each level-(m-1) interval spans four cells of the refined grid.
    for (std::size_t base = 0; base + 4 < g.size(); base += 4) {
      const int sign = (rng() >> 63) ? 1 : -1;
      const std::size_t up = sign > 0 ? base + 1 : base + 3;
      const std::size_t down = sign > 0 ? base + 3 : base + 1;
      double a = amp;
      if (g[down] < a) {
        a = g[down];
        ++out.clipped;
      }
      g[up] += a;
      g[down] -= a;
      ++out.perturbations;
    }
    g.back() = g.front();
    f.swap(g);
  }
  std::vector<double> density(f.size() - 1);
  for (std::size_t k = 0; k < density.size(); ++k) density[k] = 0.5 * (f[k] + f[k + 1]);
  out.measure = CircleMeasure::dyadic_density(depth, std::move(density));
  return out;
}

CircleMeasure kahane_smooth(const SmoothnessProfile& phi, int depth, std::uint64_t seed) {
  return kahane_construction(phi, depth, seed).measure;
}

SalemParameters choose_salem_parameters(double alpha, double epsilon) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("salem: alpha must lie in (0,1)");
  if (!(epsilon > 0.0)) throw std::invalid_argument("salem: epsilon must be positive");
  SalemParameters p;
  for (int d = 2;; ++d) {
    const double xi = std::pow(static_cast<double>(d), -1.0 / alpha);
    if (xi < 1.0 / d) {
      p.d = d;
      p.xi = xi;
      break;
    }
  }
  p.near_boundary = (1.0 / p.d - p.xi) < 1e-3;
  return p;
}

SalemConstruction salem_measure(SalemSpec spec) {
  if (spec.xi == 0.0) {
    SalemParameters p = choose_salem_parameters(spec.alpha, spec.epsilon);
    spec.d = p.d;
    spec.xi = p.xi;
  }
  if (spec.d < 2) throw std::invalid_argument("salem: branching d must be at least 2");
  if (!(spec.xi > 0.0 && spec.xi < 1.0 / spec.d)) throw std::invalid_argument("salem: xi must lie in (0, 1/d)");
  if (spec.generations < 0) throw std::invalid_argument("salem: generations must be nonnegative");
  const double leaves_d = std::pow(static_cast<double>(spec.d), spec.generations);
  if (leaves_d > double(1 << 22)) throw std::invalid_argument("salem: more than 2^22 leaves requested");
  const double nu = spec.nu();
  if ((spec.d - 1) * nu + spec.xi >= 1.0) throw std::invalid_argument("salem: sub-intervals would overlap");

  SalemConstruction out;
  std::mt19937_64 rng(spec.seed);
  const double span = 1.0 / spec.d - spec.xi;
  const double bound_factor = std::exp((std::numbers::pi * std::numbers::pi / 6.0 - 1.0) * 2.0 * spec.xi / span);
  std::vector<double> left{0.0};
  double len = 1.0, gamma = 1.0;
  out.lengths.push_back(1.0);
  for (int j = 1; j <= spec.generations; ++j) {
    double xi_j = spec.xi;
    if (spec.jitter) {
      const double lo = (1.0 - 1.0 / ((j + 1.0) * (j + 1.0))) * spec.xi;
      xi_j = lo + (spec.xi - lo) * unit_uniform(rng);
    }
    std::vector<double> next;
    next.reserve(left.size() * static_cast<std::size_t>(spec.d));
    for (double a : left)
      for (int k = 0; k < spec.d; ++k) next.push_back(a + k * nu * len);
    out.ratios.push_back(xi_j);
    out.inner_gaps.push_back((nu - xi_j) * len);
    gamma *= nu - xi_j;
    out.gamma_product.push_back(gamma);
    out.gamma_bound.push_back(std::pow(span / 2.0, j) * bound_factor);
    len *= xi_j;
    out.lengths.push_back(len);
    left.swap(next);
  }

  const double leaf_mass = 1.0 / static_cast<double>(left.size());
  std::vector<Piece> pieces;
  std::vector<Arc> arcs;
  std::vector<int> tags;
  pieces.reserve(left.size());
  const auto d = static_cast<std::size_t>(spec.d);
  for (std::size_t k = 0; k < left.size(); ++k) {
    pieces.push_back({left[k], left[k] + len, leaf_mass / len});
    arcs.push_back({left[k], left[k] + len});
    // The gap after leaf k opens at one generation below the common ancestor of leaves k, k+1.
    int tag = 1;
    if (k + 1 < left.size()) {
      std::size_t a = k, b = k + 1;
      int level = spec.generations;
      while (a != b) {
        a /= d;
        b /= d;
        --level;
      }
      tag = level + 1;
    }
    tags.push_back(tag);
  }
  out.measure = CircleMeasure::piecewise(std::move(pieces));
  out.support = IntervalSet::from_arcs(std::move(arcs), std::move(tags));
  out.spec = spec;
  return out;
}

}  // namespace cyclia
