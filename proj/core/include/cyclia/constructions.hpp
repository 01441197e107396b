#pragma once

#include <cstdint>
#include <vector>

#include "cyclia/measure.hpp"
#include "cyclia/smoothness.hpp"
#include "cyclia/support.hpp"

namespace cyclia {

struct KahaneConstruction {
  CircleMeasure measure;
  double amplitude_factor = 0.0;  // kappa: level-m amplitude is kappa * phi(2^-m)
  std::size_t clipped = 0;        // perturbations shortened to keep the density nonnegative
  std::size_t perturbations = 0;
};

// Random-sign construction with M_root = 1 on 2^depth cells. The density is the cell average
// of a continuous piecewise-linear function built level by level from mean-zero bumps, so
// adjacent dyadic averages at generation n differ by at most phi(2^-n).
KahaneConstruction kahane_construction(const SmoothnessProfile& phi, int depth, std::uint64_t seed);
CircleMeasure kahane_smooth(const SmoothnessProfile& phi, int depth, std::uint64_t seed);

struct SalemSpec {
  double alpha = 0.8;
  double epsilon = 0.05;
  int d = 2;
  double xi = 0.0;  // 0 selects choose_salem_parameters
  int generations = 12;
  std::uint64_t seed = 0;
  bool jitter = true;  // false: xi_j = xi for every j

  double nu() const { return (xi + 1.0 / d) / 2.0; }
};

struct SalemParameters {
  int d = 2;
  double xi = 0.0;
  bool near_boundary = false;  // xi within 1e-3 of 1/d
};

// Heuristic: smallest d >= 2 with d^{-1/alpha} < 1/d, xi = d^{-1/alpha}.
SalemParameters choose_salem_parameters(double alpha, double epsilon);

struct SalemConstruction {
  CircleMeasure measure;
  IntervalSet support;
  SalemSpec spec;
  std::vector<double> ratios;       // xi_j, j = 1..J
  std::vector<double> lengths;      // interval length at generation j = 0..J
  std::vector<double> inner_gaps;   // (nu - xi_j) * length_{j-1}, j = 1..J
  std::vector<double> gamma_product;  // prod_{i<=j} (nu - xi_i)
  std::vector<double> gamma_bound;    // ((1/d - xi)/2)^j exp((pi^2/6 - 1) 2 xi / (1/d - xi))
};

SalemConstruction salem_measure(SalemSpec spec);

}  // namespace cyclia
