#include "cyclia/smoothness.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "cyclia/fit.hpp"

namespace cyclia {

namespace {

using boost::math::quadrature::gauss_kronrod;

double integrate(const auto& f, double a, double b) {
  if (b <= a) return 0.0;
  double err = 0.0;
  return gauss_kronrod<double, 31>::integrate(f, a, b, 20, 1e-14, &err);
}

}  // namespace

SmoothnessProfile SmoothnessProfile::log_power(double c, double gamma) {
  return log_power(c, gamma, 0.4 * gamma);
}

SmoothnessProfile SmoothnessProfile::log_power(double c, double gamma, double beta0) {
  if (!(c > 0.0)) throw std::invalid_argument("LogPower: C must be positive");
  if (!(gamma > 0.0)) throw std::invalid_argument("LogPower: gamma must be positive");
  if (!(beta0 > 0.0 && beta0 < 1.0)) throw std::invalid_argument("LogPower: beta0 must lie in (0,1)");
  SmoothnessProfile p;
  p.family_ = Family::log_power;
  p.c_ = c;
  p.exponent_ = gamma;
  p.beta0_ = beta0;
  // e^{beta v}(1+v)^{-gamma} dips to its minimum at 1+v = gamma/beta0.
  const double l = gamma / beta0 - 1.0;
  p.witness_ = l > 0.0 ? std::exp(beta0 * l - gamma * std::log1p(l)) : 1.0;
  return p;
}

SmoothnessProfile SmoothnessProfile::power_law(double c, double beta) {
  if (!(c > 0.0)) throw std::invalid_argument("PowerLaw: C must be positive");
  if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("PowerLaw: beta must lie in (0,1)");
  SmoothnessProfile p;
  p.family_ = Family::power_law;
  p.c_ = c;
  p.exponent_ = beta;
  p.beta0_ = beta;
  p.witness_ = 1.0;
  return p;
}

SmoothnessProfile SmoothnessProfile::table(std::vector<std::pair<double, double>> samples, double beta0,
                                           double witness) {
  if (samples.size() < 2) throw std::invalid_argument("Table profile needs at least two samples");
  if (!(beta0 > 0.0 && beta0 < 1.0)) throw std::invalid_argument("Table profile: beta0 must lie in (0,1)");
  if (!(witness > 0.0 && witness <= 1.0)) throw std::invalid_argument("Table profile: witness must lie in (0,1]");
  std::sort(samples.begin(), samples.end());
  SmoothnessProfile p;
  p.family_ = Family::table;
  p.beta0_ = beta0;
  p.witness_ = witness;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    auto [t, v] = samples[k];
    if (!(t > 0.0 && t <= 1.0) || !(v > 0.0)) throw std::invalid_argument("Table profile: samples must be positive on (0,1]");
    if (k > 0 && (t == samples[k - 1].first || v < samples[k - 1].second))
      throw std::invalid_argument("Table profile: phi must be nondecreasing with distinct abscissae");
    p.log_t_.push_back(std::log(t));
    p.log_phi_.push_back(std::log(v));
  }
  p.c_ = samples.back().second;
  p.exponent_ = 0.0;
  return p;
}

double SmoothnessProfile::operator()(double t) const {
  if (!(t > 0.0 && t <= 1.0)) throw std::invalid_argument("phi is defined on (0,1]");
  return of_log(-std::log(t));
}

double SmoothnessProfile::of_log(double v) const {
  switch (family_) {
    case Family::log_power:
      return c_ * std::exp(-exponent_ * std::log1p(v));
    case Family::power_law:
      return c_ * std::exp(-exponent_ * v);
    case Family::table: {
      const double x = -v;
      std::size_t k;
      if (x <= log_t_.front())
        k = 0;
      else if (x >= log_t_.back())
        return std::exp(log_phi_.back());
      else
        k = static_cast<std::size_t>(std::upper_bound(log_t_.begin(), log_t_.end(), x) - log_t_.begin()) - 1;
      const double w = (x - log_t_[k]) / (log_t_[k + 1] - log_t_[k]);
      return std::exp(log_phi_[k] + w * (log_phi_[k + 1] - log_phi_[k]));
    }
  }
  return 0.0;
}

std::string SmoothnessProfile::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (family_) {
    case Family::log_power:
      os << "LogPower(C=" << c_ << ", gamma=" << exponent_ << ")";
      break;
    case Family::power_law:
      os << "PowerLaw(C=" << c_ << ", beta=" << exponent_ << ")";
      break;
    case Family::table:
      os << "Table(" << log_t_.size() << " samples)";
      break;
  }
  return os.str();
}

double SmoothnessProfile::almost_decreasing_ratio(std::span<const double> grid) const {
  std::vector<double> t(grid.begin(), grid.end());
  std::sort(t.begin(), t.end());
  double worst = 1.0, best_later = 0.0;
  for (std::size_t k = t.size(); k-- > 0;) {
    const double v = -std::log(t[k]);
    const double g = std::log(of_log(v)) + beta0_ * v;
    if (k + 1 < t.size()) worst = std::min(worst, std::exp(g - best_later));
    best_later = (k + 1 == t.size()) ? g : std::max(best_later, g);
  }
  return worst;
}

double phi_bracket_sq_log(const SmoothnessProfile& phi, double v) {
  if (v < 0.0) throw std::invalid_argument("phi_bracket: need 0 < s <= 1");
  const double c2 = phi.scale() * phi.scale();
  switch (phi.family()) {
    case SmoothnessProfile::Family::power_law: {
      const double b = phi.exponent();
      return -c2 * std::expm1(-2.0 * b * v) / (2.0 * b);
    }
    case SmoothnessProfile::Family::log_power: {
      const double e = 1.0 - 2.0 * phi.exponent();
      const double l = std::log1p(v);
      if (std::abs(e) < 1e-15) return c2 * l;
      return c2 * std::expm1(e * l) / e;
    }
    case SmoothnessProfile::Family::table:
      break;
  }
  return integrate([&](double u) { double f = phi.of_log(u); return f * f; }, 0.0, v);
}

double phi_bracket(const SmoothnessProfile& phi, double s) {
  if (!(s > 0.0 && s <= 1.0)) throw std::invalid_argument("phi_bracket: need 0 < s <= 1");
  return std::sqrt(phi_bracket_sq_log(phi, -std::log(s)));
}

double phi_bracket_numeric(const SmoothnessProfile& phi, double s) {
  if (!(s > 0.0 && s <= 1.0)) throw std::invalid_argument("phi_bracket: need 0 < s <= 1");
  const double v = -std::log(s);
  return std::sqrt(integrate([&](double u) { double f = phi.of_log(u); return f * f; }, 0.0, v));
}

std::string to_string(SeriesVerdict v) {
  switch (v) {
    case SeriesVerdict::convergent:
      return "convergent";
    case SeriesVerdict::divergent:
      return "divergent";
    case SeriesVerdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

namespace {

// Truncations at delta = 2^{-k}, k = 2^j; the increments of a convergent tail shrink
// geometrically in j, those of a log-divergent one stay level.
TruncationSeries truncations(const auto& integrand, int checkpoints) {
  TruncationSeries out;
  double total = 0.0, prev_v = 0.0;
  std::vector<double> j_axis, log_inc;
  for (int j = 0; j < checkpoints; ++j) {
    const double k = std::ldexp(1.0, j);
    const double v = k * std::log(2.0);
    const double inc = integrate(integrand, prev_v, v);
    total += inc;
    prev_v = v;
    out.delta_log2.push_back(k);
    out.value.push_back(total);
    if (j >= 1 && inc > 0.0) {
      j_axis.push_back(j);
      log_inc.push_back(std::log2(inc));
    }
  }
  if (j_axis.size() < 3) {
    out.verdict = SeriesVerdict::convergent;
    out.growth_slope = -std::numeric_limits<double>::infinity();
    return out;
  }
  const std::size_t half = j_axis.size() / 2;
  LinearFit f = least_squares(std::span(j_axis).subspan(half), std::span(log_inc).subspan(half));
  out.growth_slope = f.slope;
  if (f.slope <= -0.1)
    out.verdict = SeriesVerdict::convergent;
  else if (f.slope >= -0.02)
    out.verdict = SeriesVerdict::divergent;
  else
    out.verdict = SeriesVerdict::inconclusive;
  return out;
}

}  // namespace

IntegrabilityReport integrability_tests(const SmoothnessProfile& phi, double p, double epsilon, int checkpoints) {
  if (!(p > 0.0)) throw std::invalid_argument("integrability_tests: p must be positive");
  if (checkpoints < 4 || checkpoints > 40) throw std::invalid_argument("integrability_tests: checkpoints in [4,40]");
  IntegrabilityReport r;
  r.p = p;
  r.epsilon = epsilon;
  r.phi_p = truncations([&](double u) { return std::pow(phi.of_log(u), p); }, checkpoints);
  r.main_hypothesis = truncations(
      [&](double u) {
        const double b2 = phi_bracket_sq_log(phi, u);
        return std::exp(p * std::log(phi.of_log(u)) + 0.5 * std::log(std::max(b2, 1e-300)) + epsilon * b2);
      },
      checkpoints);
  if (phi.family() == SmoothnessProfile::Family::log_power && phi.exponent() == 0.5) {
    r.has_threshold = true;
    r.epsilon_threshold = (p / 2.0 - 1.0) / (phi.scale() * phi.scale());
  }
  return r;
}

}  // namespace cyclia
