#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cyclia {

// Gauge phi on (0,1] with an almost-decreasing witness: phi(s)/s^beta0 >= c phi(t)/t^beta0 for s < t.
class SmoothnessProfile {
 public:
  enum class Family { log_power, power_law, table };

  // phi(t) = C (log(e/t))^{-gamma}
  static SmoothnessProfile log_power(double c, double gamma);
  static SmoothnessProfile log_power(double c, double gamma, double beta0);
  // phi(t) = C t^beta
  static SmoothnessProfile power_law(double c, double beta);
  // Samples (t, phi(t)), interpolated linearly in (log t, log phi).
  static SmoothnessProfile table(std::vector<std::pair<double, double>> samples, double beta0, double witness);

  double operator()(double t) const;
  // phi(e^{-v}) for v >= 0; avoids underflow for tiny t.
  double of_log(double v) const;

  Family family() const { return family_; }
  double scale() const { return c_; }
  double exponent() const { return exponent_; }
  double beta0() const { return beta0_; }
  double witness() const { return witness_; }
  std::string describe() const;

  // Smallest observed phi(s)/s^b0 / (phi(t)/t^b0) over s < t in the grid (>= witness when valid).
  double almost_decreasing_ratio(std::span<const double> grid) const;

 private:
  Family family_ = Family::log_power;
  double c_ = 1.0;
  double exponent_ = 0.5;
  double beta0_ = 0.2;
  double witness_ = 1.0;
  std::vector<double> log_t_, log_phi_;
};

// <phi>(s) = (int_s^1 phi(t)^2 / t dt)^{1/2}
double phi_bracket(const SmoothnessProfile& phi, double s);
// Same integral by adaptive quadrature regardless of family.
double phi_bracket_numeric(const SmoothnessProfile& phi, double s);
// <phi>(e^{-v})^2
double phi_bracket_sq_log(const SmoothnessProfile& phi, double v);

enum class SeriesVerdict { convergent, divergent, inconclusive };
std::string to_string(SeriesVerdict v);

struct TruncationSeries {
  std::vector<double> delta_log2;  // k with delta = 2^{-k}
  std::vector<double> value;
  double growth_slope = 0.0;  // d value / d log2(k) over the tail
  SeriesVerdict verdict = SeriesVerdict::inconclusive;
};

struct IntegrabilityReport {
  double p = 0.0;
  double epsilon = 0.0;
  TruncationSeries phi_p;           // int_delta^1 phi^p / t
  TruncationSeries main_hypothesis; // int_delta^1 phi^p/t <phi> e^{eps <phi>^2}
  // Closed-form threshold for LogPower(C, 1/2): the hypothesis converges iff eps < (p/2 - 1)/C^2.
  double epsilon_threshold = 0.0;
  bool has_threshold = false;
};

IntegrabilityReport integrability_tests(const SmoothnessProfile& phi, double p, double epsilon,
                                        int checkpoints = 20);

}  // namespace cyclia
