#pragma once

#include <complex>
#include <vector>

#include "cyclia/measure.hpp"

namespace cyclia {

using cplx = std::complex<double>;

// H(z) = int (w+z)/(w-z) d mu(w), w = e^{2 pi i x}; |z| < 1.
cplx herglotz(const CircleMeasure& mu, cplx z);
cplx herglotz_derivative(const CircleMeasure& mu, cplx z);
double poisson(const CircleMeasure& mu, cplx z);

struct RingValues {
  double radius = 0.0;
  double phase = 0.0;  // sample m sits at angle 2 pi (m/M + phase)
  std::vector<cplx> value;
  std::vector<cplx> derivative;  // empty unless requested
};

// Herglotz transform with a precomputed spectrum for uniform dyadic densities, so that a ring
// of samples costs one FFT convolution instead of samples x pieces kernel evaluations.
class HerglotzEvaluator {
 public:
  explicit HerglotzEvaluator(CircleMeasure mu);

  const CircleMeasure& measure() const { return mu_; }
  cplx value(cplx z) const;
  cplx derivative(cplx z) const;
  RingValues ring(double r, std::size_t samples, double phase = 0.0, bool with_derivative = true) const;

 private:
  CircleMeasure mu_;
  int grid_depth_ = -1;
  std::vector<cplx> spectrum_;  // DFT of the grid densities
};

}  // namespace cyclia
