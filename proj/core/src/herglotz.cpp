#include "cyclia/herglotz.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cyclia/parallel.hpp"
#include "fft.hpp"
#include "phase.hpp"

namespace cyclia {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kFastGridDepth = 6;

void require_interior(cplx z) {
  if (!(std::abs(z) < 1.0)) throw std::domain_error("Herglotz transform needs |z| < 1");
}

// int_a^{a+len} (w+z)/(w-z) dx for unit density. The argument of w - z increases along the arc
// by pi (len + harmonic measure of the arc at z), which lies in (pi len, pi (1 + len)).
cplx arc_kernel(double a, double len, cplx z) {
  const cplx wa = detail::cis2pi(a);
  const cplx chord = wa * detail::cis2pi(0.5 * len) * cplx(0.0, 2.0 * detail::sinpi(len));  // w_b - w_a
  const cplx u = chord / (wa - z);
  const double mod = 0.5 * std::log1p(2.0 * u.real() + std::norm(u));
  double arg = std::atan2(u.imag(), 1.0 + u.real());
  const double centre = kPi * (0.5 + len);
  arg += 2.0 * kPi * std::round((centre - arg) / (2.0 * kPi));
  // (1/(pi i)) (mod + i arg) - len
  return {arg / kPi - len, -mod / kPi};
}

cplx arc_kernel_derivative(double a, double len, cplx z) {
  const cplx wa = detail::cis2pi(a);
  const cplx wb = detail::cis2pi(a + len);
  const cplx chord = wa * detail::cis2pi(0.5 * len) * cplx(0.0, 2.0 * detail::sinpi(len));
  // (1/(pi i)) (1/(w_a - z) - 1/(w_b - z)) = (1/(pi i)) (w_b - w_a) / ((w_a - z)(w_b - z))
  return chord / ((wa - z) * (wb - z)) / cplx(0.0, kPi);
}

cplx atom_kernel(double x, cplx z) {
  const cplx w = detail::cis2pi(x);
  return (w + z) / (w - z);
}

cplx atom_kernel_derivative(double x, cplx z) {
  const cplx w = detail::cis2pi(x);
  const cplx d = w - z;
  return 2.0 * w / (d * d);
}

cplx direct_value(const CircleMeasure& mu, cplx z) {
  cplx s = 0.0;
  for (const Piece& p : mu.pieces())
    if (p.density != 0.0) s += p.density * arc_kernel(p.a, p.b - p.a, z);
  for (const Atom& at : mu.atoms()) s += at.mass * atom_kernel(at.x, z);
  return s;
}

cplx direct_derivative(const CircleMeasure& mu, cplx z) {
  cplx s = 0.0;
  for (const Piece& p : mu.pieces())
    if (p.density != 0.0) s += p.density * arc_kernel_derivative(p.a, p.b - p.a, z);
  for (const Atom& at : mu.atoms()) s += at.mass * atom_kernel_derivative(at.x, z);
  return s;
}

}  // namespace

cplx herglotz(const CircleMeasure& mu, cplx z) {
  require_interior(z);
  return direct_value(mu, z);
}

cplx herglotz_derivative(const CircleMeasure& mu, cplx z) {
  require_interior(z);
  return direct_derivative(mu, z);
}

double poisson(const CircleMeasure& mu, cplx z) { return herglotz(mu, z).real(); }

HerglotzEvaluator::HerglotzEvaluator(CircleMeasure mu) : mu_(std::move(mu)) {
  const auto& grid = mu_.uniform_grid();
  if (grid && grid->depth >= kFastGridDepth) {
    grid_depth_ = grid->depth;
    spectrum_.assign(grid->density.begin(), grid->density.end());
    detail::fft_forward(spectrum_);
  }
}

cplx HerglotzEvaluator::value(cplx z) const { return herglotz(mu_, z); }
cplx HerglotzEvaluator::derivative(cplx z) const { return herglotz_derivative(mu_, z); }

RingValues HerglotzEvaluator::ring(double r, std::size_t samples, double phase, bool with_derivative) const {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("ring radius must lie in [0, 1)");
  if (samples == 0) throw std::invalid_argument("ring needs at least one sample");
  RingValues out;
  out.radius = r;
  out.phase = phase;
  out.value.assign(samples, 0.0);
  if (with_derivative) out.derivative.assign(samples, 0.0);
  const double m_inv = 1.0 / static_cast<double>(samples);
  auto point = [&](std::size_t m) { return r * detail::cis2pi(static_cast<double>(m) * m_inv + phase); };

  const bool pow2 = (samples & (samples - 1)) == 0;
  if (grid_depth_ >= 0 && pow2) {
    const std::size_t cells = spectrum_.size();
    const std::size_t len = std::max(samples, cells);
    const double h = 1.0 / static_cast<double>(cells);
    const double l_inv = 1.0 / static_cast<double>(len);
    std::vector<cplx> kernel(len), dkernel(with_derivative ? len : 0);
    parallel_for(len, [&](std::size_t i) {
      const double sigma = static_cast<double>(i) * l_inv + phase;
      const cplx zeta = r * detail::cis2pi(sigma);
      kernel[i] = arc_kernel(0.0, h, zeta);
      if (with_derivative) dkernel[i] = detail::cis2pi(sigma) * arc_kernel_derivative(0.0, h, zeta);
    });
    const std::size_t mask = cells - 1;
    auto convolve = [&](std::vector<cplx>& k) {
      detail::fft_forward(k);
      for (std::size_t q = 0; q < len; ++q) k[q] *= spectrum_[q & mask];
      detail::fft_backward(k);
    };
    convolve(kernel);
    if (with_derivative) convolve(dkernel);
    const std::size_t stride = len / samples;
    for (std::size_t m = 0; m < samples; ++m) {
      out.value[m] = kernel[m * stride] * l_inv;
      if (with_derivative) {
        const double sigma = static_cast<double>(m * stride) * l_inv + phase;
        out.derivative[m] = dkernel[m * stride] * l_inv * detail::cis2pi(-sigma);
      }
    }
    if (!mu_.atoms().empty()) {
      for (std::size_t m = 0; m < samples; ++m) {
        const cplx z = point(m);
        for (const Atom& at : mu_.atoms()) {
          out.value[m] += at.mass * atom_kernel(at.x, z);
          if (with_derivative) out.derivative[m] += at.mass * atom_kernel_derivative(at.x, z);
        }
      }
    }
    return out;
  }

  parallel_for(samples, [&](std::size_t m) {
    const cplx z = point(m);
    out.value[m] = direct_value(mu_, z);
    if (with_derivative) out.derivative[m] = direct_derivative(mu_, z);
  });
  return out;
}

}  // namespace cyclia
