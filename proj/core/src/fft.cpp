#include "fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace cyclia::detail {

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

void transform(std::vector<std::complex<double>>& data, int sign) {
  if (data.empty()) return;
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(data.size()), buf, buf, sign, FFTW_ESTIMATE);
  }
  if (plan == nullptr) throw std::runtime_error("fftw: plan creation failed");
  fftw_execute(plan);
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan);
}

}  // namespace

void fft_forward(std::vector<std::complex<double>>& data) { transform(data, FFTW_FORWARD); }
void fft_backward(std::vector<std::complex<double>>& data) { transform(data, FFTW_BACKWARD); }

}  // namespace cyclia::detail
