#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "cyclia/function_model.hpp"

namespace cyclia {

struct CoefficientVector {
  std::vector<cplx> c;              // f^(0..K)
  double radius = 0.0;              // extraction circle (0 when exact)
  std::size_t samples = 0;
  std::vector<double> alias_bound;  // per coefficient; zeros when exact
};

class AliasBoundError : public std::runtime_error {
 public:
  AliasBoundError(const std::string& what, double bound) : std::runtime_error(what), bound_(bound) {}
  double bound() const { return bound_; }

 private:
  double bound_;
};

struct ExtractionPlan {
  std::size_t samples;
  double radius;
};

// M = 4 * nextpow2(K + 1), r with r^{M-K} = 1e-14.
ExtractionPlan default_extraction(std::size_t k_max);

// f^(k) ~ (1/(M r^k)) sum_m f(r e^{2 pi i m/M}) e^{-2 pi i k m/M}, k <= K.
CoefficientVector maclaurin(const FunctionModel& f, std::size_t k_max, double r, std::size_t samples,
                            double tolerance = 1e-10);
CoefficientVector maclaurin(const FunctionModel& f, std::size_t k_max);

// (-mu(T), -2 mu^(1), ..., -2 mu^(K)): Maclaurin coefficients of log S_mu.
CoefficientVector log_coefficients(const CircleMeasure& mu, std::size_t k_max);

}  // namespace cyclia
