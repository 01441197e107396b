#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cyclia/check_report.hpp"
#include "cyclia/function_model.hpp"
#include "cyclia/measure.hpp"
#include "cyclia/norms.hpp"
#include "cyclia/smoothness.hpp"
#include "cyclia/support.hpp"

namespace cyclia {

// Slope threshold for "bounded in t" verdicts.
inline constexpr double kTrendThreshold = 0.05;

// sup_t seminorm of f / f_t, f_t(z) = f(tz), judged by the log trend against log(1/(1-t)).
CheckReport brown_shields_table(const FunctionModel& f, double p, std::span<const double> t_grid,
                                const QuadratureGrid& grid = {});

// int dtheta / |S_mu(r e^{i theta})|^p against <phi>(1-r) e^{C <phi>(1-r)^2}.
CheckReport pmean_ratio(const CircleMeasure& mu, const SmoothnessProfile& phi, double p,
                        std::span<const double> r_grid);

// P_mu at the centre of each top-half box T_I against C M^mu_I, generations 0..depth.
CheckReport poisson_martingale_gap(const CircleMeasure& mu, int depth);

// sup over dyadic I of nu(S(I)) / (|I| log(e/|I|)^{1-p/2}) for nu = |S_mu'|^p (1-|z|)^{p-1} dA.
// Stability is judged over generations [stable_from, max_generation] (default: upper half).
CheckReport multiplier_log_onebox(const CircleMeasure& mu, double p, int max_generation,
                                  const QuadratureGrid& grid = {}, int stable_from = -1);

// max_{|z|=r} |S_mu'(z)| (1-r) / phi(1-r).
CheckReport derivative_sup_ratio(const CircleMeasure& mu, const SmoothnessProfile& phi,
                                 std::span<const double> r_grid);

// Entropy of the complementary arcs of E and mu(E); mass on a set of finite entropy
// obstructs cyclicity and is reported as a fail.
CheckReport korenblum_necessity(const CircleMeasure& mu, const IntervalSet& e);

struct AnnihilatorPairing {
  cplx value;
  double truncation_bound = 0.0;  // omitted k > K terms
  double alias_bound = 0.0;       // coefficient extraction
};

// 2 pi sum_{k=m}^{K} S^(k-m) conj(S^(k+1)) r^{2k+1}: the functional int f zeta conj(S) on |z| = r
// applied to f = z^m S.
AnnihilatorPairing annihilator_pairing(const FunctionModel& s, int m, std::size_t k_max, double r,
                                       std::size_t samples = 0);
AnnihilatorPairing annihilator_pairing(const CircleMeasure& mu, int m, std::size_t k_max, double r,
                                       std::size_t samples = 0);
CheckReport annihilator_check(const CircleMeasure& mu, std::span<const int> ms, std::size_t k_max,
                              std::span<const double> r_grid);

// int |(f(z) - f(tz)) phi'(tz)|^p (1-|z|)^{p-1} dA against ||phi||^p ||f||_B^p.
CheckReport bloch_difference_bound(const FunctionModel& f_bloch, const FunctionModel& phi, double p,
                                   std::span<const double> t_grid, const QuadratureGrid& grid = {});

// Least-squares slope of log|mu^(n)| against log n over n = 2^k <= n_max.
CheckReport fourier_decay_fit(const CircleMeasure& mu, std::int64_t n_max, double alpha, double epsilon);

// Partial sums of |mu^(n)|^p over |n| <= N at N = 2^k; passes when the last dyadic block adds
// at most `tolerance` of the total.
CheckReport fourier_lp_summability(const CircleMeasure& mu, double p, std::int64_t n_max,
                                   double tolerance = 0.02);

// Truncations of int phi^p/t and of the main hypothesis integral; passes when the latter converges.
CheckReport integrability_check(const SmoothnessProfile& phi, double p, double epsilon, int checkpoints = 20);

}  // namespace cyclia
