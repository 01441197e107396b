#include "cyclia/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fft.hpp"
#include "phase.hpp"

namespace cyclia {

std::complex<double> fourier_coefficient(const CircleMeasure& mu, std::int64_t n) {
  if (n == 0) return mu.total_mass();
  const auto nd = static_cast<double>(n);
  std::complex<double> sum = 0.0;
  for (const Atom& at : mu.atoms()) sum += at.mass * detail::cis2pi(-nd * at.x);
  for (const Piece& p : mu.pieces()) {
    // density (e^{-2 pi i n a} - e^{-2 pi i n b}) / (2 pi i n), written around the midpoint.
    const double w = detail::sinpi(nd * (p.b - p.a)) / (std::numbers::pi * nd);
    sum += p.density * w * detail::cis2pi(-nd * 0.5 * (p.a + p.b));
  }
  return sum;
}

std::vector<std::complex<double>> fourier_coefficients(const CircleMeasure& mu, std::int64_t n_max) {
  if (n_max < 0) throw std::invalid_argument("fourier_coefficients: n_max must be nonnegative");
  std::vector<std::complex<double>> out(static_cast<std::size_t>(n_max) + 1);
  const auto& grid = mu.uniform_grid();
  if (grid && grid->depth >= 4) {
    // Cell integrals factor as sin(pi n h)/(pi n) e^{-pi i n h} times the DFT of the densities.
    std::vector<std::complex<double>> dft(grid->density.begin(), grid->density.end());
    detail::fft_forward(dft);
    const double h = std::ldexp(1.0, -grid->depth);
    const std::size_t mask = dft.size() - 1;
    for (std::int64_t n = 0; n <= n_max; ++n) {
      const auto nd = static_cast<double>(n);
      const double w = n == 0 ? h : detail::sinpi(nd * h) / (std::numbers::pi * nd);
      std::complex<double> v = w * detail::cis2pi(-0.5 * nd * h) * dft[static_cast<std::size_t>(n) & mask];
      for (const Atom& at : mu.atoms()) v += at.mass * detail::cis2pi(-nd * at.x);
      out[static_cast<std::size_t>(n)] = v;
    }
    out[0] = mu.total_mass();
    return out;
  }
  for (std::int64_t n = 0; n <= n_max; ++n) out[static_cast<std::size_t>(n)] = fourier_coefficient(mu, n);
  return out;
}

}  // namespace cyclia
