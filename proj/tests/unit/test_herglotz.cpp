#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cyclia/constructions.hpp"
#include "cyclia/fourier.hpp"
#include "cyclia/herglotz.hpp"

namespace cyclia {
namespace {

constexpr double kPi = std::numbers::pi;

cplx circle(double x) { return std::polar(1.0, 2.0 * kPi * x); }

// Oracle: Gauss-Legendre-free midpoint rule on a very fine subdivision of each piece, with
// Richardson extrapolation between n and 2n points.
cplx herglotz_by_quadrature(const std::vector<Piece>& pieces, cplx z) {
  auto rule = [&](int n) {
    cplx s = 0.0;
    for (const Piece& p : pieces) {
      const double h = (p.b - p.a) / n;
      for (int k = 0; k < n; ++k) {
        const cplx w = circle(p.a + (k + 0.5) * h);
        s += p.density * h * (w + z) / (w - z);
      }
    }
    return s;
  };
  const cplx a = rule(20000), b = rule(40000);
  return b + (b - a) / 3.0;
}

TEST(Herglotz, AtomClosedForms) {
  const CircleMeasure atom = CircleMeasure::atomic({{0.0, 1.0}});
  for (double r : {0.0, 0.3, 0.9, 0.999}) {
    const cplx z(-r, 0.0);
    EXPECT_NEAR(poisson(atom, z), (1 - r) / (1 + r), 1e-13);
    const cplx h = herglotz(atom, z);
    EXPECT_NEAR(std::abs(h - (1.0 + z) / (1.0 - z)), 0.0, 1e-13);
    EXPECT_NEAR(std::abs(herglotz_derivative(atom, z) - 2.0 / ((1.0 - z) * (1.0 - z))), 0.0, 1e-11);
  }
  EXPECT_THROW(herglotz(atom, cplx(1.0, 0.0)), std::domain_error);
}

TEST(Herglotz, LebesgueIsConstant) {
  const CircleMeasure leb = CircleMeasure::lebesgue(1.7);
  const HerglotzEvaluator h(leb);
  for (cplx z : {cplx(0, 0), cplx(0.5, 0.3), cplx(-0.99, 0.01), cplx(0.0, -0.9999)}) {
    EXPECT_NEAR(std::abs(herglotz(leb, z) - 1.7), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(herglotz_derivative(leb, z)), 0.0, 1e-10);
  }
  const RingValues ring = h.ring(0.999, 256, 0.0, true);
  for (std::size_t m = 0; m < 256; ++m) EXPECT_NEAR(std::abs(ring.value[m] - 1.7), 0.0, 1e-10);
}

TEST(Herglotz, PiecesMatchQuadrature) {
  const std::vector<Piece> pieces{{0.05, 0.4, 1.3}, {0.4, 0.93, 0.2}};
  const CircleMeasure mu = CircleMeasure::piecewise(pieces);
  for (cplx z : {cplx(0.2, 0.1), cplx(-0.6, 0.5), cplx(0.7, -0.65), cplx(0.0, 0.0)})
    EXPECT_NEAR(std::abs(herglotz(mu, z) - herglotz_by_quadrature(pieces, z)), 0.0, 1e-9);
  // Near the boundary, close to an endpoint and inside an arc.
  const cplx near_end = 0.99 * circle(0.4);
  const cplx near_mid = 0.95 * circle(0.2);
  EXPECT_NEAR(std::abs(herglotz(mu, near_mid) - herglotz_by_quadrature(pieces, near_mid)), 0.0, 1e-7);
  EXPECT_NEAR(poisson(mu, near_end), herglotz_by_quadrature(pieces, near_end).real(), 1e-5);
}

TEST(Herglotz, LongArcBranchIsContinuous) {
  // One arc covering almost the whole circle must approach the Lebesgue value.
  const CircleMeasure mu = CircleMeasure::piecewise({{0.0, 1.0 - 1e-9, 1.0}});
  for (double x : {0.1, 0.37, 0.5, 0.77, 0.999})
    for (double r : {0.5, 0.9, 0.999}) EXPECT_NEAR(std::abs(herglotz(mu, r * circle(x)) - 1.0), 0.0, 1e-6);
}

TEST(Herglotz, DerivativeMatchesFiniteDifference) {
  const CircleMeasure mu = CircleMeasure::piecewise({{0.1, 0.3, 2.0}, {0.6, 0.61, 5.0}}, {{0.8, 0.4}});
  for (cplx z : {cplx(0.3, 0.2), cplx(-0.5, -0.5), cplx(0.0, 0.9)}) {
    const double h = 1e-5;
    const cplx fd = (herglotz(mu, z + h) - herglotz(mu, z - h)) / (2.0 * h);
    EXPECT_NEAR(std::abs(herglotz_derivative(mu, z) - fd), 0.0, 1e-6 * (1.0 + std::abs(fd)));
  }
}

TEST(HerglotzEvaluator, FastRingMatchesDirect) {
  const SmoothnessProfile phi = SmoothnessProfile::log_power(1.0, 0.5);
  const CircleMeasure mu = kahane_smooth(phi, 10, 1);
  const HerglotzEvaluator h(mu);
  for (double r : {0.5, 0.99, 0.9995}) {
    const std::size_t m = 512;
    const double phase = 0.3 / m;
    const RingValues ring = h.ring(r, m, phase, true);
    for (std::size_t k = 0; k < m; k += 37) {
      const cplx z = r * circle(static_cast<double>(k) / m + phase);
      EXPECT_NEAR(std::abs(ring.value[k] - herglotz(mu, z)), 0.0, 1e-9 * (1.0 + std::abs(ring.value[k])));
      const cplx d = herglotz_derivative(mu, z);
      EXPECT_NEAR(std::abs(ring.derivative[k] - d), 0.0, 1e-9 * (1.0 + std::abs(d)));
    }
  }
}

TEST(Fourier, ArcAndAtomClosedForms) {
  const CircleMeasure mu = CircleMeasure::piecewise({{0.2, 0.45, 2.0}}, {{0.7, 0.5}});
  for (std::int64_t n : {0, 1, 2, 7, -3, 100}) {
    // Oracle: int_a^b e^{-2 pi i n x} dx in closed form, plus the atom.
    cplx oracle;
    if (n == 0) {
      oracle = 2.0 * 0.25 + 0.5;
    } else {
      const cplx c(0.0, -2.0 * kPi * static_cast<double>(n));
      oracle = 2.0 * (std::exp(c * 0.45) - std::exp(c * 0.2)) / c + 0.5 * std::exp(c * 0.7);
    }
    EXPECT_NEAR(std::abs(fourier_coefficient(mu, n) - oracle), 0.0, 1e-13);
  }
}

TEST(Fourier, FastPathMatchesDirect) {
  const CircleMeasure mu = kahane_smooth(SmoothnessProfile::log_power(1.0, 0.5), 8, 2);
  const auto all = fourier_coefficients(mu, 600);
  ASSERT_EQ(all.size(), 601u);
  EXPECT_DOUBLE_EQ(all[0].real(), mu.total_mass());
  for (std::int64_t n : {1, 2, 255, 256, 257, 511, 600})
    EXPECT_NEAR(std::abs(all[static_cast<std::size_t>(n)] - fourier_coefficient(mu, n)), 0.0, 1e-13);
}

}  // namespace
}  // namespace cyclia
