#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "cyclia/measure.hpp"

namespace cyclia {

// mu^(n) = int e^{-2 pi i n x} d mu(x), in closed form.
std::complex<double> fourier_coefficient(const CircleMeasure& mu, std::int64_t n);
// mu^(0..n_max).
std::vector<std::complex<double>> fourier_coefficients(const CircleMeasure& mu, std::int64_t n_max);

}  // namespace cyclia
