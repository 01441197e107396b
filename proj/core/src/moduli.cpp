#include "cyclia/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

namespace cyclia {

namespace {

constexpr double kTol = 1e-12;

void require_length(double t) {
  if (!(t > 0.0 && t <= 1.0)) throw std::invalid_argument("modulus: t must lie in (0, 1]");
}

double closed_window(const CircleMeasure& mu, double x, double len) {
  if (mu.atoms().empty()) return mu.arc_mass(x, len, false);
  return mu.arc_mass(x - kTol, len + 2.0 * kTol, true);
}

// |mu(I) - mu(J)| for I = [x, x+s), J = [x+s, x+2s), maximized over the assignment of atoms
// sitting exactly on the three endpoints.
double window_difference(const CircleMeasure& mu, double x, double s) {
  if (mu.atoms().empty()) return std::abs(mu.arc_mass(x, s, false) - mu.arc_mass(x + s, s, false));
  if (s <= 2.0 * kTol) return 0.0;
  const double oi = mu.arc_mass(x + kTol, s - 2.0 * kTol, true);
  const double oj = mu.arc_mass(x + s + kTol, s - 2.0 * kTol, true);
  const double a0 = closed_window(mu, x, 0.0);
  const double a1 = closed_window(mu, x + s, 0.0);
  const double a2 = closed_window(mu, x + 2.0 * s, 0.0);
  return std::max(oi + a0 + a1 - oj, oj + a1 + a2 - oi);
}

// Half-grid cumulative distribution of a uniform-grid density, extended periodically.
struct HalfGrid {
  std::vector<double> f;
  std::size_t cells2 = 0;  // 2^{depth+1}
  double h = 0.0;          // cell width

  double at(double y) const {  // F(y) for y >= 0 in half-cell units
    const auto k = static_cast<std::size_t>(std::floor(y));
    const double w = y - static_cast<double>(k);
    return f[k] + w * (f[k + 1] - f[k]);
  }
};

HalfGrid half_grid(const UniformGrid& grid, double total, std::size_t extra) {
  HalfGrid g;
  const std::size_t cells = grid.density.size();
  g.h = 1.0 / static_cast<double>(cells);
  g.cells2 = 2 * cells;
  g.f.resize(g.cells2 + extra + 2);
  double acc = 0.0;
  for (std::size_t k = 0; k < cells; ++k) {
    g.f[2 * k] = acc;
    g.f[2 * k + 1] = acc + 0.5 * grid.density[k] * g.h;
    acc += grid.density[k] * g.h;
  }
  for (std::size_t i = g.cells2; i < g.f.size(); ++i) g.f[i] = g.f[i - g.cells2] + total;
  return g;
}

// max_i |2F(i+q) - F(i) - F(i+2q)| over one period of half-grid positions.
double half_grid_max(const HalfGrid& g, std::size_t q) {
  typedef double v2d __attribute__((vector_size(16)));
  const double* f = g.f.data();
  const std::size_t n = g.cells2;
  v2d hi = {0.0, 0.0}, lo = {0.0, 0.0};
  const v2d two = {2.0, 2.0};
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    v2d a, b, c;
    std::memcpy(&a, f + i, sizeof a);
    std::memcpy(&b, f + i + q, sizeof b);
    std::memcpy(&c, f + i + 2 * q, sizeof c);
    v2d d = two * b - a - c;
    hi = d > hi ? d : hi;
    lo = d < lo ? d : lo;
  }
  double m = std::max({hi[0], hi[1], -lo[0], -lo[1]});
  for (; i < n; ++i) m = std::max(m, std::abs(2.0 * f[i + q] - f[i] - f[i + 2 * q]));
  return m;
}

std::vector<double> omega_uniform(const CircleMeasure& mu, std::span<const double> ts) {
  const UniformGrid& grid = *mu.uniform_grid();
  double tmax = 0.0;
  for (double t : ts) tmax = std::max(tmax, std::min(t, 0.5));
  const double cells = static_cast<double>(grid.density.size());
  const auto qmax = static_cast<std::size_t>(std::floor(2.0 * tmax * cells + 1e-9));
  HalfGrid g = half_grid(grid, mu.total_mass(), 2 * qmax + 2 * grid.density.size() + 4);
  std::vector<double> prefix(qmax + 1, 0.0);
  for (std::size_t q = 1; q <= qmax; ++q) prefix[q] = std::max(prefix[q - 1], half_grid_max(g, q));

  std::vector<double> out;
  for (double t : ts) {
    const double tp = std::min(t, 0.5);
    const double units = 2.0 * tp * cells;  // t' in half-cell units
    const auto q = static_cast<std::size_t>(std::floor(units + 1e-9));
    double w = prefix[std::min(q, qmax)];
    if (std::abs(units - std::round(units)) > 1e-9) {
      // Window length off the half grid: vertices sit at x in {kh, kh - t', kh - 2t'}.
      const double s = units;
      const std::size_t period = g.cells2;
      for (std::size_t k = 0; k < period; k += 2) {
        for (double shift : {0.0, s, 2.0 * s}) {
          double x = static_cast<double>(k) - shift;
          x -= std::floor(x / static_cast<double>(period)) * static_cast<double>(period);
          const double d = 2.0 * g.at(x + s) - g.at(x) - g.at(x + 2.0 * s);
          w = std::max(w, std::abs(d));
        }
      }
    }
    out.push_back(w);
  }
  return out;
}

std::vector<double> omega_general(const CircleMeasure& mu, std::span<const double> ts) {
  const std::vector<double> bp = mu.breakpoints();
  const bool exact = bp.size() <= kExactBreakpointLimit;
  double tmax = 0.0;
  for (double t : ts) tmax = std::max(tmax, std::min(t, 0.5));

  std::vector<double> lengths;
  auto add = [&](double s) {
    if (s > 2.0 * kTol && s <= tmax) lengths.push_back(s);
  };
  const std::size_t nb = bp.size();
  const std::size_t reach = exact ? nb : std::min<std::size_t>(nb, 8);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t k = 1; k <= reach; ++k) {
      double diff = bp[(i + k) % nb] - bp[i];
      if (diff <= 0.0) diff += 1.0;
      add(diff);
      add(0.5 * diff);
    }
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end(),
                            [](double a, double b) { return std::abs(a - b) <= 1e-14; }),
                lengths.end());
  if (!exact && lengths.size() > 2000) {
    std::vector<double> thin;
    for (std::size_t k = 0; k < 2000; ++k) thin.push_back(lengths[k * lengths.size() / 2000]);
    lengths.swap(thin);
  }

  auto sup_at = [&](double s) {
    double w = 0.0;
    for (double b : bp)
      for (double x : {b, b - s, b - 2.0 * s}) w = std::max(w, window_difference(mu, x, s));
    return w;
  };

  double atom_limit = 0.0;
  for (const Atom& a : mu.atoms()) atom_limit = std::max(atom_limit, a.mass);

  std::vector<double> running(lengths.size());
  double acc = atom_limit;
  for (std::size_t k = 0; k < lengths.size(); ++k) {
    acc = std::max(acc, sup_at(lengths[k]));
    running[k] = acc;
  }
  std::vector<double> out;
  for (double t : ts) {
    const double tp = std::min(t, 0.5);
    auto it = std::upper_bound(lengths.begin(), lengths.end(), tp);
    double w = it == lengths.begin() ? atom_limit : running[static_cast<std::size_t>(it - lengths.begin()) - 1];
    w = std::max(w, sup_at(tp));
    out.push_back(w);
  }
  return out;
}

}  // namespace

double modulus_continuity(const CircleMeasure& mu, double t) {
  const double v[] = {t};
  return modulus_continuity(mu, std::span<const double>(v)).front();
}

std::vector<double> modulus_continuity(const CircleMeasure& mu, std::span<const double> ts) {
  const std::vector<double> bp = mu.breakpoints();
  std::vector<double> out;
  for (double t : ts) {
    require_length(t);
    if (t >= 1.0 || bp.empty()) {
      out.push_back(t >= 1.0 ? mu.total_mass() : mu.total_mass() * t);
      continue;
    }
    double best = 0.0;
    for (double b : bp) best = std::max({best, closed_window(mu, b, t), closed_window(mu, b - t, t)});
    out.push_back(std::min(best, mu.total_mass()));
  }
  return out;
}

bool modulus_smoothness_is_exact(const CircleMeasure& mu) {
  return (mu.atoms().empty() && mu.uniform_grid()) || mu.breakpoints().size() <= kExactBreakpointLimit;
}

double modulus_smoothness(const CircleMeasure& mu, double t) {
  const double v[] = {t};
  return modulus_smoothness(mu, std::span<const double>(v)).front();
}

std::vector<double> modulus_smoothness(const CircleMeasure& mu, std::span<const double> ts) {
  for (double t : ts) require_length(t);
  if (ts.empty()) return {};
  if (mu.atoms().empty() && mu.uniform_grid()) return omega_uniform(mu, ts);
  return omega_general(mu, ts);
}

double smoothness_constant(const CircleMeasure& mu, const SmoothnessProfile& phi, std::span<const double> t_grid) {
  const std::vector<double> w = modulus_smoothness(mu, t_grid);
  double c = 0.0;
  for (std::size_t k = 0; k < t_grid.size(); ++k) {
    const double denom = t_grid[k] * phi(t_grid[k]);
    if (!(denom > 0.0)) throw std::invalid_argument("smoothness_constant: phi(t) vanishes on the grid");
    c = std::max(c, w[k] / denom);
  }
  return c;
}

CheckReport anderson_check(const CircleMeasure& mu, std::span<const double> t_grid) {
  CheckReport r;
  r.name = "anderson";
  r.statement =
      "delta_mu(t) <= 8t(2 + log log(e/t)/96) and omega_mu(t) <= 36t/sqrt(log(e/t)) on the grid";
  r.lhs_label = "omega";
  r.rhs_label = "omega_bound";
  r.ratio_label = "omega_ratio";
  const std::vector<double> delta = modulus_continuity(mu, t_grid);
  const std::vector<double> omega = modulus_smoothness(mu, t_grid);
  double worst_delta = 0.0, worst_omega = 0.0;
  for (std::size_t k = 0; k < t_grid.size(); ++k) {
    const double t = t_grid[k];
    const double le = std::log(std::exp(1.0) / t);
    const double db = 8.0 * t * (2.0 + std::log(le) / 96.0);
    const double wb = 36.0 * t / std::sqrt(le);
    CheckRow row;
    row.inputs = {{"t", t}};
    row.lhs = omega[k];
    row.rhs = wb;
    row.ratio = omega[k] / wb;
    row.extra = {{"delta", delta[k]}, {"delta_bound", db}, {"delta_ratio", delta[k] / db}};
    worst_delta = std::max(worst_delta, delta[k] / db);
    worst_omega = std::max(worst_omega, row.ratio);
    r.rows.push_back(row);
  }
  r.statistic = "max of delta and omega ratios to their bounds";
  r.worst_ratio = std::max(worst_delta, worst_omega);
  r.threshold = 1.0;
  r.fits = {{"worst_delta_ratio", worst_delta}, {"worst_omega_ratio", worst_omega}};
  if (!modulus_smoothness_is_exact(mu)) r.notes.push_back("omega is a lower bound: restricted window lengths");
  r.decide();
  return r;
}

}  // namespace cyclia
