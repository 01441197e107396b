#pragma once

#include <complex>
#include <vector>

namespace cyclia::detail {

// Unnormalized in-place DFT: forward uses e^{-2 pi i jk/n}, backward e^{+2 pi i jk/n}.
void fft_forward(std::vector<std::complex<double>>& data);
void fft_backward(std::vector<std::complex<double>>& data);

}  // namespace cyclia::detail
