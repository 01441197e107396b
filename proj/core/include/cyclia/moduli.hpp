#pragma once

#include <span>
#include <vector>

#include "cyclia/check_report.hpp"
#include "cyclia/measure.hpp"
#include "cyclia/smoothness.hpp"

namespace cyclia {

// Above this many breakpoints (and off the uniform dyadic grid) modulus_smoothness maximizes
// over a restricted set of window lengths and is then a lower bound.
inline constexpr std::size_t kExactBreakpointLimit = 64;

// delta_mu(t): sup of mu(I) over arcs of length <= t.
double modulus_continuity(const CircleMeasure& mu, double t);
std::vector<double> modulus_continuity(const CircleMeasure& mu, std::span<const double> ts);

// omega_mu(t): sup of |mu(I) - mu(J)| over adjacent arcs of common length <= t.
double modulus_smoothness(const CircleMeasure& mu, double t);
std::vector<double> modulus_smoothness(const CircleMeasure& mu, std::span<const double> ts);
bool modulus_smoothness_is_exact(const CircleMeasure& mu);

// max over the grid of omega(t) / (t phi(t)).
double smoothness_constant(const CircleMeasure& mu, const SmoothnessProfile& phi, std::span<const double> t_grid);

// delta(t) <= 8t(2 + log log(e/t)/96) and omega(t) <= 36 t / sqrt(log(e/t)).
CheckReport anderson_check(const CircleMeasure& mu, std::span<const double> t_grid);

}  // namespace cyclia
