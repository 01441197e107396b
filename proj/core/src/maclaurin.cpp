#include "cyclia/maclaurin.hpp"

#include <cmath>

#include "cyclia/fourier.hpp"
#include "fft.hpp"

namespace cyclia {

ExtractionPlan default_extraction(std::size_t k_max) {
  std::size_t p = 1;
  while (p < k_max + 1) p <<= 1;
  const std::size_t m = 4 * p;
  return {m, std::pow(1e-14, 1.0 / static_cast<double>(m - k_max))};
}

CoefficientVector maclaurin(const FunctionModel& f, std::size_t k_max) {
  const ExtractionPlan plan = default_extraction(k_max);
  return maclaurin(f, k_max, plan.radius, plan.samples);
}

CoefficientVector maclaurin(const FunctionModel& f, std::size_t k_max, double r, std::size_t samples,
                            double tolerance) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("maclaurin: radius must lie in (0,1)");
  if (samples == 0 || (samples & (samples - 1)) != 0) throw std::invalid_argument("maclaurin: M must be a power of two");
  if (k_max >= samples) throw std::invalid_argument("maclaurin: need K < M");

  const auto bound = f.coefficient_bound();
  CoefficientVector out;
  out.radius = r;
  out.samples = samples;
  const double rm = std::pow(r, static_cast<double>(samples));
  out.alias_bound.resize(k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) {
    const double geometric = std::pow(r, static_cast<double>(samples - k)) / (1.0 - rm);
    out.alias_bound[k] = bound ? *bound * geometric : std::numeric_limits<double>::infinity();
  }

  RingJet ring = f.ring(r, samples);
  std::vector<cplx> data = std::move(ring.value);
  if (!bound) {
    // No a-priori coefficient bound: use the sampled maximum on the extraction circle.
    double top = 0.0;
    for (cplx v : data) top = std::max(top, std::abs(v));
    for (std::size_t k = 0; k <= k_max; ++k)
      out.alias_bound[k] = top * std::pow(r, static_cast<double>(samples - k)) / (1.0 - rm);
  }
  for (std::size_t k = 0; k <= k_max; ++k)
    if (out.alias_bound[k] > tolerance)
      throw AliasBoundError("maclaurin: alias bound " + std::to_string(out.alias_bound[k]) + " at k=" +
                                std::to_string(k) + " exceeds tolerance",
                            out.alias_bound[k]);

  detail::fft_forward(data);
  out.c.resize(k_max + 1);
  const double inv = 1.0 / static_cast<double>(samples);
  double scale = inv;
  for (std::size_t k = 0; k <= k_max; ++k) {
    out.c[k] = data[k] * scale;
    scale /= r;
  }
  return out;
}

CoefficientVector log_coefficients(const CircleMeasure& mu, std::size_t k_max) {
  std::vector<cplx> hat = fourier_coefficients(mu, static_cast<std::int64_t>(k_max));
  CoefficientVector out;
  out.c.resize(k_max + 1);
  out.c[0] = -mu.total_mass();
  for (std::size_t k = 1; k <= k_max; ++k) out.c[k] = -2.0 * hat[k];
  out.alias_bound.assign(k_max + 1, 0.0);
  return out;
}

}  // namespace cyclia
