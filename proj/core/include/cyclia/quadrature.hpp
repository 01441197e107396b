#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "cyclia/function_model.hpp"

namespace cyclia {

struct QuadratureRing {
  double r = 0.0;
  double u = 0.0;       // -log2(1 - r)
  double weight = 0.0;  // radial weight for int dr
  std::size_t samples = 0;
  int panel = 0;
};

// Gauss-Legendre panels in u = -log2(1 - r): panel k covers u in [k s, (k+1) s], so the
// radial truncation is r_L = 1 - 2^{-panels * stretch}. Angular counts grow like 1/(1 - r).
struct QuadratureGrid {
  double stretch = 1.0;
  int panels = 17;
  int nodes = 8;  // 4, 8, 16 or 32
  double angular_density = 16.0;
  std::size_t min_samples = 64;
  std::size_t max_samples = std::size_t{1} << 16;

  QuadratureGrid doubled() const;
  std::vector<QuadratureRing> rings() const;
  double outer_radius() const;
  std::size_t samples_at(double r) const;
};

// Value of int_D g dA for g sampled ring by ring: sample(ring jet, m) gives g at sample m.
struct DiscIntegral {
  double value = 0.0;
  double last_ring_mean = 0.0;  // angular integral (times r) on the outermost ring
  double tail_estimate = 0.0;   // last_ring_mean * (1 - r_last)
};

using RingSampler = std::function<void(const QuadratureRing&, std::vector<double>&)>;

// Per-ring angular samples are produced by `sampler` (one value per angular sample); the
// integral uses (2 pi / M) sums and radial weights times r.
DiscIntegral disc_integral(const QuadratureGrid& grid, const RingSampler& sampler);

}  // namespace cyclia
