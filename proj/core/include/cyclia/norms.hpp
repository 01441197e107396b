#pragma once

#include "cyclia/dyadic.hpp"
#include "cyclia/maclaurin.hpp"
#include "cyclia/quadrature.hpp"

namespace cyclia {

struct LpaNorm {
  double value = 0.0;
  bool tail_flag = false;  // alias bounds too large to ignore at this p
};

// (sum_{k<=K} |c_k|^p)^{1/p}
LpaNorm lp_a_norm(const CoefficientVector& c, double p);
// (sum |c_k|^2 (1+k)^alpha)^{1/2}
double weighted_l2alpha(const CoefficientVector& c, double alpha);

struct SeminormEstimate {
  double value = 0.0;           // from grid.doubled()
  double coarse_value = 0.0;    // from grid
  double error_estimate = 0.0;  // |value - coarse| + truncation tail
  double tail_estimate = 0.0;
  double integral = 0.0;        // value^p
};

// (int_D (1-|z|)^{p-1} |f'(z)|^p dA)^{1/p}
SeminormEstimate besov_seminorm(const FunctionModel& f, double p, const QuadratureGrid& grid = {});
// seminorm + |f(0)|
double besov_norm(const FunctionModel& f, double p, const QuadratureGrid& grid = {});
// int_D (1-|z|)^{p-1} |f'(z)|^p dA on exactly this grid (no doubling).
DiscIntegral besov_integral(const FunctionModel& f, double p, const QuadratureGrid& grid);

// max over ring samples and z = 0 of |f'(z)| (1 - |z|); a lower bound for the Bloch seminorm.
double bloch_seminorm(const FunctionModel& f, const QuadratureGrid& grid = {});

// (mean over the circle of radius r of |f|^p)^{1/p}
double hp_mean(const FunctionModel& f, double p, double r, std::size_t samples = 4096);

// int over the Carleson box S(I) of |f'|^p (1-|z|)^{p-1} dA.
double carleson_box_measure(const FunctionModel& f, double p, const DyadicInterval& interval,
                            const QuadratureGrid& grid = {});

// Box masses for every dyadic interval up to max_generation, from one pass over the rings.
// Entry [n][j] is the mass of S(I) for I = (n, j). The grid stretch must divide 1.
std::vector<std::vector<double>> carleson_box_table(const FunctionModel& f, double p, int max_generation,
                                                    const QuadratureGrid& grid = {});

}  // namespace cyclia
