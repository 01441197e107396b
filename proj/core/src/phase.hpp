#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace cyclia::detail {

// e^{2 pi i x}, exact at multiples of 1/4.
inline std::complex<double> cis2pi(double x) {
  const double r = std::remainder(x, 1.0);
  const double q = std::nearbyint(4.0 * r);
  const double e = r - 0.25 * q;
  const double c = std::cos(2.0 * std::numbers::pi * e), s = std::sin(2.0 * std::numbers::pi * e);
  switch ((static_cast<int>(q) % 4 + 4) % 4) {
    case 0:
      return {c, s};
    case 1:
      return {-s, c};
    case 2:
      return {-c, -s};
    default:
      return {s, -c};
  }
}

// sin(pi x), exactly zero at integers.
inline double sinpi(double x) {
  double r = std::remainder(x, 2.0);
  if (r > 0.5)
    r = 1.0 - r;
  else if (r < -0.5)
    r = -1.0 - r;
  return std::sin(std::numbers::pi * r);
}

}  // namespace cyclia::detail
