#include "cyclia/diagnostics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "cyclia/fit.hpp"
#include "cyclia/fourier.hpp"
#include "cyclia/maclaurin.hpp"
#include "cyclia/parallel.hpp"

namespace cyclia {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::size_t boundary_samples(double r) {
  QuadratureGrid g;
  g.angular_density = 64.0;
  g.min_samples = 256;
  return g.samples_at(r);
}

void require_grid(std::span<const double> grid, const char* what) {
  if (grid.empty()) throw std::invalid_argument(std::string(what) + ": empty grid");
  for (double v : grid)
    if (!(v > 0.0 && v < 1.0)) throw std::invalid_argument(std::string(what) + ": grid values must lie in (0,1)");
}

nlohmann::json grid_json(std::span<const double> g) { return nlohmann::json(std::vector<double>(g.begin(), g.end())); }

}  // namespace

CheckReport brown_shields_table(const FunctionModel& f, double p, std::span<const double> t_grid,
                                const QuadratureGrid& grid) {
  const auto t0 = Clock::now();
  require_grid(t_grid, "brown_shields_table");
  if (!(p > 2.0)) throw std::invalid_argument("brown_shields_table: p must exceed 2");
  CheckReport r;
  r.name = "brown-shields";
  r.statement = "sup over t in (0,1) of the D^p_{p-1} seminorm of f/f_t is finite, f_t(z) = f(tz)";
  r.params = {{"p", p}, {"t_grid", grid_json(t_grid)}, {"model", f.describe()}};
  r.lhs_label = "seminorm";
  r.rhs_label = "running_sup";
  r.ratio_label = "ratio_to_first";
  std::vector<double> ts, values;
  double sup = 0.0, first = 0.0;
  for (double t : t_grid) {
    const FunctionModel g = FunctionModel::quotient(f, FunctionModel::dilate(f, t));
    const SeminormEstimate s = besov_seminorm(g, p, grid);
    sup = std::max(sup, s.value);
    if (ts.empty()) first = s.value;
    CheckRow row;
    row.inputs = {{"t", t}};
    row.lhs = s.value;
    row.rhs = sup;
    row.ratio = first > 0.0 ? s.value / first : 0.0;
    row.extra = {{"error_estimate", s.error_estimate}, {"tail_estimate", s.tail_estimate}};
    r.rows.push_back(row);
    ts.push_back(t);
    values.push_back(s.value);
  }
  r.statistic = "slope of log seminorm against log(1/(1-t))";
  r.worst_ratio = log_trend_slope(ts, values, 1e-12);
  r.threshold = kTrendThreshold;
  r.fits = {{"sup", sup}, {"trend_slope", r.worst_ratio}};
  r.decide();
  r.runtime_seconds = seconds_since(t0);
  return r;
}

CheckReport pmean_ratio(const CircleMeasure& mu, const SmoothnessProfile& phi, double p,
                        std::span<const double> r_grid) {
  const auto t0 = Clock::now();
  require_grid(r_grid, "pmean_ratio");
  if (!(p > 0.0)) throw std::invalid_argument("pmean_ratio: p must be positive");
  const HerglotzEvaluator h(mu);
  CheckReport r;
  r.name = "pmeans";
  r.statement = "int dtheta/|S_mu(r e^{i theta})|^p <= <phi>(1-r) exp(C_p <phi>(1-r)^2)";
  r.params = {{"p", p}, {"phi", phi.describe()}, {"r_grid", grid_json(r_grid)}};
  r.lhs_label = "log_lhs";
  r.rhs_label = "log_rhs_fit";
  r.ratio_label = "residual_decades";

  std::vector<double> log_lhs(r_grid.size()), bracket(r_grid.size());
  parallel_for(r_grid.size(), [&](std::size_t k) {
    const double rad = r_grid[k];
    const std::size_t m = boundary_samples(rad);
    const RingValues ring = h.ring(rad, m, 0.0, false);
    double top = -std::numeric_limits<double>::infinity();
    for (const cplx& v : ring.value) top = std::max(top, p * v.real());
    std::vector<double> e(m);
    for (std::size_t i = 0; i < m; ++i) e[i] = std::exp(p * ring.value[i].real() - top);
    log_lhs[k] = top + std::log(pairwise_sum(e) / static_cast<double>(m)) + std::log(2.0 * std::numbers::pi);
    bracket[k] = phi_bracket(phi, 1.0 - rad);
  });

  std::vector<double> x, y;
  for (std::size_t k = 0; k < r_grid.size(); ++k) {
    if (!(bracket[k] > 0.0)) throw std::invalid_argument("pmean_ratio: <phi>(1-r) vanishes on the grid");
    x.push_back(bracket[k] * bracket[k]);
    y.push_back(log_lhs[k] - std::log(bracket[k]));
  }
  const LinearFit fit = least_squares(x, y);
  for (std::size_t k = 0; k < r_grid.size(); ++k) {
    CheckRow row;
    row.inputs = {{"r", r_grid[k]}};
    row.lhs = log_lhs[k];
    row.rhs = fit.intercept + std::log(bracket[k]) + fit.slope * x[k];
    row.ratio = (row.lhs - row.rhs) / std::numbers::ln10;
    row.extra = {{"phi_bracket", bracket[k]}};
    r.rows.push_back(row);
  }
  r.statistic = "spread of fit residuals in decades";
  r.worst_ratio = fit.residual_spread / std::numbers::ln10;
  r.threshold = 1.0;
  r.fits = {{"C_p", fit.slope}, {"log_constant", fit.intercept}};
  r.decide();
  r.runtime_seconds = seconds_since(t0);
  return r;
}

CheckReport poisson_martingale_gap(const CircleMeasure& mu, int depth) {
  const auto t0 = Clock::now();
  const DyadicMartingale mart = martingale_from_measure(mu, depth);
  const HerglotzEvaluator h(mu);
  std::vector<std::vector<double>> pois(static_cast<std::size_t>(depth) + 1);
  parallel_for(pois.size(), [&](std::size_t n) {
    const double len = std::ldexp(1.0, -static_cast<int>(n));
    const RingValues ring = h.ring(1.0 - 0.75 * len, std::size_t{1} << n, 0.5 * len, false);
    pois[n].resize(ring.value.size());
    for (std::size_t j = 0; j < ring.value.size(); ++j) pois[n][j] = ring.value[j].real();
  });

  std::vector<double> ms, ps;
  for (int n = 0; n <= depth; ++n) {
    auto g = mart.generation(n);
    ms.insert(ms.end(), g.begin(), g.end());
    ps.insert(ps.end(), pois[static_cast<std::size_t>(n)].begin(), pois[static_cast<std::size_t>(n)].end());
  }
  double c = least_squares(ms, ps).slope;
  double mean_m = 0.0, var_m = 0.0, mean_p = 0.0;
  for (std::size_t k = 0; k < ms.size(); ++k) {
    mean_m += ms[k];
    mean_p += ps[k];
  }
  mean_m /= static_cast<double>(ms.size());
  mean_p /= static_cast<double>(ms.size());
  for (double m : ms) var_m += (m - mean_m) * (m - mean_m);
  if (var_m <= 1e-24 * static_cast<double>(ms.size()) * (1.0 + mean_m * mean_m)) c = mean_m > 0.0 ? mean_p / mean_m : 1.0;

  CheckReport r;
  r.name = "poisson-martingale";
  r.statement = "P_mu(z) <= C M^mu_{I_z} + O(1) at the centres of the top-half boxes T_I";
  r.params = {{"depth", depth}};
  r.lhs_label = "max_poisson";
  r.rhs_label = "C_max_martingale";
  r.ratio_label = "gap";
  std::vector<double> gens, gaps;
  for (int n = 0; n <= depth; ++n) {
    auto g = mart.generation(n);
    const auto& pn = pois[static_cast<std::size_t>(n)];
    double gap = -std::numeric_limits<double>::infinity(), pmax = 0.0, mmax = 0.0, p_at_mmax = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      gap = std::max(gap, pn[j] - c * g[j]);
      pmax = std::max(pmax, pn[j]);
      if (j == 0 || g[j] > mmax) {
        mmax = g[j];
        p_at_mmax = pn[j];
      }
    }
    CheckRow row;
    row.inputs = {{"generation", static_cast<double>(n)}};
    row.lhs = pmax;
    row.rhs = c * mmax;
    row.ratio = gap;
    row.extra = {{"poisson_over_martingale_at_peak", mmax > 0.0 ? p_at_mmax / mmax : 0.0}};
    r.rows.push_back(row);
    if (n >= std::min(4, depth)) {
      gens.push_back(n);
      gaps.push_back(gap);
    }
  }
  const double slope = gens.size() >= 2 ? least_squares(gens, gaps).slope : 0.0;
  r.statistic = "absolute slope of the gap against generation (from generation 4)";
  r.worst_ratio = std::abs(slope);
  r.threshold = kTrendThreshold;
  r.fits = {{"C", c}, {"gap_slope", slope}};
  r.decide();
  r.runtime_seconds = seconds_since(t0);
  return r;
}

CheckReport multiplier_log_onebox(const CircleMeasure& mu, double p, int max_generation, const QuadratureGrid& grid,
                                  int stable_from) {
  const auto t0 = Clock::now();
  if (!(p > 2.0)) throw std::invalid_argument("multiplier_log_onebox: p must exceed 2");
  if (stable_from < 0) stable_from = max_generation / 2;
  if (stable_from > max_generation) throw std::invalid_argument("multiplier_log_onebox: stable_from beyond max generation");
  const FunctionModel s = FunctionModel::singular_inner(mu);
  const auto table = carleson_box_table(s, p, max_generation, grid);
  CheckReport r;
  r.name = "multiplier";
  r.statement = "nu(S(I)) <= C |I| (log(e/|I|))^{1-p/2} for nu = |S_mu'|^p (1-|z|)^{p-1} dA";
  r.params = {{"p", p}, {"max_generation", max_generation}, {"stable_from", stable_from}};
  r.lhs_label = "max_box_mass";
  r.rhs_label = "box_scale";
  r.ratio_label = "sup_ratio";
  std::vector<double> x, y;
  bool all_zero = true;
  double overall = 0.0;
  for (int n = 0; n <= max_generation; ++n) {
    const double len = std::ldexp(1.0, -n);
    const double scale = len * std::pow(std::log(std::exp(1.0) / len), 1.0 - p / 2.0);
    const auto& row_n = table[static_cast<std::size_t>(n)];
    const double top = *std::max_element(row_n.begin(), row_n.end());
    CheckRow row;
    row.inputs = {{"generation", static_cast<double>(n)}};
    row.lhs = top;
    row.rhs = scale;
    row.ratio = top / scale;
    overall = std::max(overall, row.ratio);
    r.rows.push_back(row);
    if (n >= stable_from) {
      x.push_back(n * std::numbers::ln2);
      y.push_back(std::log(std::max(row.ratio, 1e-300)));
      if (row.ratio > 1e-300) all_zero = false;
    }
  }
  const double slope = (all_zero || x.size() < 2) ? 0.0 : least_squares(x, y).slope;
  r.statistic = "slope of log sup ratio against log(1/|I|) over the stability window";
  r.worst_ratio = slope;
  r.threshold = kTrendThreshold;
  r.fits = {{"sup_ratio", overall}, {"trend_slope", slope}};
  r.decide();
  r.runtime_seconds = seconds_since(t0);
  return r;
}

CheckReport derivative_sup_ratio(const CircleMeasure& mu, const SmoothnessProfile& phi,
                                 std::span<const double> r_grid) {
  const auto t0 = Clock::now();
  require_grid(r_grid, "derivative_sup_ratio");
  const FunctionModel s = FunctionModel::singular_inner(mu);
  std::vector<double> sup(r_grid.size());
  parallel_for(r_grid.size(), [&](std::size_t k) {
    const RingJet jet = s.ring(r_grid[k], boundary_samples(r_grid[k]));
    double m = 0.0;
    for (const cplx& d : jet.derivative) m = std::max(m, std::abs(d));
    sup[k] = m;
  });
  CheckReport r;
  r.name = "derivative-sup";
  r.statement = "sup_{|z|=r} |S_mu'(z)| <= C phi(1-r)/(1-r)";
  r.params = {{"phi", phi.describe()}, {"r_grid", grid_json(r_grid)}};
  r.lhs_label = "sup_derivative";
  r.rhs_label = "phi_over_distance";
  r.ratio_label = "ratio";
  std::vector<double> ratios;
  for (std::size_t k = 0; k < r_grid.size(); ++k) {
    const double d = 1.0 - r_grid[k];
    CheckRow row;
    row.inputs = {{"r", r_grid[k]}};
    row.lhs = sup[k];
    row.rhs = phi(d) / d;
    row.ratio = sup[k] / row.rhs;
    ratios.push_back(row.ratio);
    r.rows.push_back(row);
  }
  r.statistic = "slope of log ratio against log(1/(1-r))";
  r.worst_ratio = log_trend_slope(std::vector<double>(r_grid.begin(), r_grid.end()), ratios, 1e-300);
  r.threshold = kTrendThreshold;
  r.fits = {{"max_ratio", *std::max_element(ratios.begin(), ratios.end())}, {"trend_slope", r.worst_ratio}};
  r.decide();
  r.runtime_seconds = seconds_since(t0);
  return r;
}

CheckReport korenblum_necessity(const CircleMeasure& mu, const IntervalSet& e) {
  const auto t0 = Clock::now();
  const EntropyReport ent = bc_entropy(e);
  const double mass = measure_of_set(mu, e);
  CheckReport r;
  r.name = "korenblum";
  r.statement = "a cyclic S_mu in l^p_A, p > 2, puts no mass on Beurling-Carleson sets";
  r.params = {{"arcs", e.arcs().size()}, {"gaps", e.gaps().size()}};
  r.lhs_label = "entropy";
  r.rhs_label = "set_mass";
  r.ratio_label = "set_mass_fraction";
  CheckRow row;
  row.inputs = {{"arc_length", e.arc_length()}};
  row.lhs = ent.total;
  row.rhs = mass;
  row.ratio = mu.total_mass() > 0.0 ? mass / mu.total_mass() : 0.0;
  row.extra = {{"subtotal_ratio", ent.subtotal_ratio}};
  r.rows.push_back(row);
  for (std::size_t j = 0; j < ent.generation_subtotal.size(); ++j) {
    CheckRow g;
    g.inputs = {{"arc_length", static_cast<double>(j)}};
    g.lhs = ent.generation_subtotal[j];
    g.rhs = 0.0;
    g.ratio = 0.0;
    g.extra = {{"subtotal_ratio", 0.0}};
    r.rows.push_back(g);
  }
  if (!ent.generation_subtotal.empty())
    r.notes.push_back("rows after the first list entropy subtotals by gap generation (first column)");
  r.statistic = "mu-mass of the set";
  r.worst_ratio = mass;
  r.threshold = 1e-12;
  r.fits = {{"entropy", ent.total}, {"set_mass", mass}, {"subtotal_ratio", ent.subtotal_ratio}};
  r.notes.push_back("entropy verdict: " + to_string(ent.verdict) + " (" + ent.note + ")");
  r.decide();
  if (r.verdict == Verdict::fail) {
    if (ent.verdict == SeriesVerdict::convergent)
      r.notes.push_back("not cyclic in any l^p_A, p > 2: positive mass on a set of finite entropy");
    else
      r.verdict = Verdict::inconclusive;
  } else {
    r.notes.push_back("no obstruction from this set");
  }
  r.runtime_seconds = seconds_since(t0);
  return r;
}

AnnihilatorPairing annihilator_pairing(const FunctionModel& s, int m, std::size_t k_max, double r,
                                       std::size_t samples) {
  if (m < 0) throw std::invalid_argument("annihilator_pairing: m must be nonnegative");
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("annihilator_pairing: need 0 < r < 1");
  const std::size_t need = k_max + 1;
  ExtractionPlan plan = default_extraction(need);
  if (samples != 0) {
    plan.samples = samples;
    plan.radius = std::pow(1e-14, 1.0 / static_cast<double>(samples - need));
  }
  const CoefficientVector c = maclaurin(s, need, plan.radius, plan.samples);
  AnnihilatorPairing out;
  cplx sum = 0.0;
  for (std::size_t k = static_cast<std::size_t>(m); k <= k_max; ++k)
    sum += c.c[k - static_cast<std::size_t>(m)] * std::conj(c.c[k + 1]) * std::pow(r, 2.0 * static_cast<double>(k) + 1.0);
  out.value = 2.0 * std::numbers::pi * sum;
  const double b = s.coefficient_bound().value_or(1.0);
  out.truncation_bound =
      2.0 * std::numbers::pi * b * b * std::pow(r, 2.0 * static_cast<double>(k_max) + 3.0) / (1.0 - r * r);
  out.alias_bound = *std::max_element(c.alias_bound.begin(), c.alias_bound.end());
  return out;
}

AnnihilatorPairing annihilator_pairing(const CircleMeasure& mu, int m, std::size_t k_max, double r,
                                       std::size_t samples) {
  return annihilator_pairing(FunctionModel::singular_inner(mu), m, k_max, r, samples);
}

CheckReport annihilator_check(const CircleMeasure& mu, std::span<const int> ms, std::size_t k_max,
                              std::span<const double> r_grid) {
  const auto t0 = Clock::now();
  require_grid(r_grid, "annihilator_check");
  if (ms.empty()) throw std::invalid_argument("annihilator_check: no shifts given");
  const FunctionModel s = FunctionModel::singular_inner(mu);
  const std::size_t need = k_max + 1;
  const ExtractionPlan plan = default_extraction(need);
  const CoefficientVector c = maclaurin(s, need, plan.radius, plan.samples);
  CheckReport r;
  r.name = "annihilator";
  r.statement = "the functional f -> int f zeta conj(S_mu) dtheta vanishes on z^m S_mu";
  r.params = {{"k_max", k_max}, {"r_grid", grid_json(r_grid)}, {"m", std::vector<int>(ms.begin(), ms.end())}};
  r.lhs_label = "abs_pairing";
  r.rhs_label = "truncation_bound";
  r.ratio_label = "ratio_to_first_radius";
  double worst = -std::numeric_limits<double>::infinity();
  for (int m : ms) {
    if (m < 0 || static_cast<std::size_t>(m) > k_max) throw std::invalid_argument("annihilator_check: bad shift");
    std::vector<double> rs, vals;
    double first = 0.0;
    for (double rad : r_grid) {
      cplx sum = 0.0;
      for (std::size_t k = static_cast<std::size_t>(m); k <= k_max; ++k)
        sum += c.c[k - static_cast<std::size_t>(m)] * std::conj(c.c[k + 1]) *
               std::pow(rad, 2.0 * static_cast<double>(k) + 1.0);
      const double v = std::abs(2.0 * std::numbers::pi * sum);
      if (rs.empty()) first = v;
      CheckRow row;
      row.inputs = {{"m", static_cast<double>(m)}, {"r", rad}};
      row.lhs = v;
      row.rhs = 2.0 * std::numbers::pi * std::pow(rad, 2.0 * static_cast<double>(k_max) + 3.0) / (1.0 - rad * rad);
      row.ratio = first > 0.0 ? v / first : 0.0;
      r.rows.push_back(row);
      rs.push_back(rad);
      vals.push_back(v);
    }
    worst = std::max(worst, log_trend_slope(rs, vals, 1e-14));
  }
  r.statistic = "largest slope of log|pairing| against log(1/(1-r)) over the shifts";
  r.worst_ratio = worst;
  r.threshold = 0.0;
  r.fits = {{"trend_slope", worst}};
  r.decide();
  r.runtime_seconds = seconds_since(t0);
  return r;
}

CheckReport bloch_difference_bound(const FunctionModel& f_bloch, const FunctionModel& phi, double p,
                                   std::span<const double> t_grid, const QuadratureGrid& grid) {
  const auto t0 = Clock::now();
  require_grid(t_grid, "bloch_difference_bound");
  if (!(p > 1.0)) throw std::invalid_argument("bloch_difference_bound: p must exceed 1");
  const double besov_p = besov_integral(phi, p, grid).value;
  const double bloch = bloch_seminorm(f_bloch, grid);
  const double rhs = besov_p * std::pow(bloch, p);
  CheckReport r;
  r.name = "bloch-diff";
  r.statement = "sup_t int |(f(z) - f(tz)) phi'(tz)|^p (1-|z|)^{p-1} dA <= C ||phi||^p ||f||_B^p";
  r.params = {{"p", p}, {"t_grid", grid_json(t_grid)}, {"f", f_bloch.describe()}, {"phi", phi.describe()}};
  r.lhs_label = "integral";
  r.rhs_label = "besov_times_bloch";
  r.ratio_label = "ratio";
  std::vector<double> ts, ratios;
  for (double t : t_grid) {
    const DiscIntegral di = disc_integral(grid, [&](const QuadratureRing& ring, std::vector<double>& out) {
      const RingJet a = f_bloch.ring(ring.r, ring.samples);
      const RingJet b = f_bloch.ring(t * ring.r, ring.samples);
      const RingJet d = phi.ring(t * ring.r, ring.samples);
      const double w = std::pow(1.0 - ring.r, p - 1.0);
      out.resize(ring.samples);
      for (std::size_t m = 0; m < ring.samples; ++m)
        out[m] = w * std::pow(std::abs((a.value[m] - b.value[m]) * d.derivative[m]), p);
    });
    CheckRow row;
    row.inputs = {{"t", t}};
    row.lhs = di.value;
    row.rhs = rhs;
    row.ratio = rhs > 0.0 ? di.value / rhs : 0.0;
    row.extra = {{"tail_estimate", di.tail_estimate}};
    r.rows.push_back(row);
    ts.push_back(t);
    ratios.push_back(row.ratio);
  }
  r.statistic = "slope of log ratio against log(1/(1-t))";
  r.worst_ratio = log_trend_slope(ts, ratios, 1e-300);
  r.threshold = kTrendThreshold;
  r.fits = {{"constant", *std::max_element(ratios.begin(), ratios.end())},
            {"besov_integral", besov_p},
            {"bloch_seminorm", bloch}};
  r.decide();
  r.runtime_seconds = seconds_since(t0);
  return r;
}

CheckReport fourier_decay_fit(const CircleMeasure& mu, std::int64_t n_max, double alpha, double epsilon) {
  const auto t0 = Clock::now();
  if (n_max < 64) throw std::invalid_argument("fourier_decay_fit: n_max must be at least 64");
  const auto hat = fourier_coefficients(mu, n_max);
  CheckReport r;
  r.name = "fourier-decay";
  r.statement = "|mu^(n)| = O(n^{-(alpha/2 - epsilon)})";
  r.params = {{"n_max", n_max}, {"alpha", alpha}, {"epsilon", epsilon}};
  r.lhs_label = "abs_coefficient";
  r.rhs_label = "target_power";
  r.ratio_label = "ratio";
  std::vector<double> x, y;
  const double target = alpha / 2.0 - epsilon;
  for (std::int64_t n = 1; n <= n_max; n *= 2) {
    const double a = std::abs(hat[static_cast<std::size_t>(n)]);
    const double rhs = std::pow(static_cast<double>(n), -target);
    CheckRow row;
    row.inputs = {{"n", static_cast<double>(n)}};
    row.lhs = a;
    row.rhs = rhs;
    row.ratio = a / rhs;
    r.rows.push_back(row);
    if (a > 0.0) {
      x.push_back(std::log(static_cast<double>(n)));
      y.push_back(std::log(a));
    }
  }
  if (x.empty()) throw std::invalid_argument("fourier_decay_fit: all sampled coefficients vanish");
  const LinearFit fit = least_squares(x, y);
  // Block maxima over (n/2, n] track the O(.) envelope rather than values at n = 2^k alone.
  std::vector<double> ex, ey;
  for (std::int64_t n = 2; n <= n_max; n *= 2) {
    double top = 0.0;
    for (std::int64_t m = n / 2 + 1; m <= n; ++m) top = std::max(top, std::abs(hat[static_cast<std::size_t>(m)]));
    if (top > 0.0) {
      ex.push_back(std::log(static_cast<double>(n)));
      ey.push_back(std::log(top));
    }
  }
  r.statistic = "least-squares slope of log|mu^(n)| against log n";
  r.worst_ratio = fit.slope;
  r.threshold = -target + 0.1;
  r.fits = {{"slope", fit.slope}, {"intercept", fit.intercept}, {"target_slope", -target}};
  if (ex.size() >= 2) r.fits.push_back({"envelope_slope", least_squares(ex, ey).slope});
  if (x.size() < r.rows.size()) r.notes.push_back("zero coefficients skipped in the fit");
  r.decide();
  r.runtime_seconds = seconds_since(t0);
  return r;
}

CheckReport fourier_lp_summability(const CircleMeasure& mu, double p, std::int64_t n_max, double tolerance) {
  const auto t0 = Clock::now();
  if (!(p >= 2.0)) throw std::invalid_argument("fourier_lp_summability: p must be at least 2");
  if (n_max < 2) throw std::invalid_argument("fourier_lp_summability: n_max must be at least 2");
  const auto hat = fourier_coefficients(mu, n_max);
  CheckReport r;
  r.name = "fourier-lp";
  r.statement = "sum over n of |mu^(n)|^p is finite";
  r.params = {{"p", p}, {"n_max", n_max}, {"tolerance", tolerance}};
  r.lhs_label = "partial_sum";
  r.rhs_label = "block_increment";
  r.ratio_label = "relative_increment";
  std::vector<double> terms;
  double total = std::pow(std::abs(hat[0]), p), prev = total, last_rel = 0.0;
  std::int64_t upto = 0;
  for (std::int64_t n_cut = 1; n_cut <= n_max; n_cut *= 2) {
    terms.clear();
    for (std::int64_t n = upto + 1; n <= n_cut; ++n) terms.push_back(2.0 * std::pow(std::abs(hat[static_cast<std::size_t>(n)]), p));
    total += pairwise_sum(terms);
    upto = n_cut;
    CheckRow row;
    row.inputs = {{"N", static_cast<double>(n_cut)}};
    row.lhs = total;
    row.rhs = total - prev;
    row.ratio = total > 0.0 ? (total - prev) / total : 0.0;
    last_rel = row.ratio;
    r.rows.push_back(row);
    prev = total;
  }
  r.statistic = "relative increment of the last dyadic block";
  r.worst_ratio = last_rel;
  r.threshold = tolerance;
  r.fits = {{"partial_sum", total}};
  r.decide();
  r.runtime_seconds = seconds_since(t0);
  return r;
}

CheckReport integrability_check(const SmoothnessProfile& phi, double p, double epsilon, int checkpoints) {
  const auto t0 = Clock::now();
  const IntegrabilityReport rep = integrability_tests(phi, p, epsilon, checkpoints);
  CheckReport r;
  r.name = "integrability";
  r.statement = "int_0^1 phi^p/t dt < infinity and int_0^1 (phi^p/t) <phi> exp(eps <phi>^2) dt < infinity";
  r.params = {{"phi", phi.describe()}, {"p", p}, {"epsilon", epsilon}, {"checkpoints", checkpoints}};
  r.lhs_label = "phi_p_integral";
  r.rhs_label = "hypothesis_integral";
  r.ratio_label = "hypothesis_over_phi_p";
  for (std::size_t k = 0; k < rep.phi_p.value.size(); ++k) {
    CheckRow row;
    row.inputs = {{"log2_inverse_delta", rep.phi_p.delta_log2[k]}};
    row.lhs = rep.phi_p.value[k];
    row.rhs = rep.main_hypothesis.value[k];
    row.ratio = row.lhs > 0.0 ? row.rhs / row.lhs : 0.0;
    r.rows.push_back(row);
  }
  r.statistic = "log2 growth slope of the hypothesis integral's dyadic increments";
  r.worst_ratio = rep.main_hypothesis.growth_slope;
  r.threshold = -0.1;
  r.fits = {{"phi_p_increment_slope", rep.phi_p.growth_slope},
            {"hypothesis_increment_slope", rep.main_hypothesis.growth_slope}};
  if (rep.has_threshold) r.fits.push_back({"epsilon_threshold", rep.epsilon_threshold});
  r.notes.push_back("phi^p/t integral: " + to_string(rep.phi_p.verdict));
  r.notes.push_back("hypothesis integral: " + to_string(rep.main_hypothesis.verdict));
  r.decide();
  if (rep.main_hypothesis.verdict == SeriesVerdict::inconclusive) r.verdict = Verdict::inconclusive;
  r.runtime_seconds = seconds_since(t0);
  return r;
}

}  // namespace cyclia
