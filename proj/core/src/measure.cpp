#include "cyclia/measure.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace cyclia {

namespace {

double wrap01(double x) {
  double y = x - std::floor(x);
  return y >= 1.0 ? 0.0 : y;
}

// Smallest n <= kMaxDepth with x * 2^n integral, or -1.
int dyadic_order(double x) {
  for (int n = 0; n <= kMaxDepth; ++n) {
    double s = std::ldexp(x, n);
    if (s == std::floor(s)) return n;
  }
  return -1;
}

}  // namespace

CircleMeasure CircleMeasure::lebesgue(double total_mass) {
  if (!(total_mass > 0.0) || !std::isfinite(total_mass))
    throw std::invalid_argument("lebesgue: total mass must be positive and finite");
  return piecewise({{0.0, 1.0, total_mass}});
}

CircleMeasure CircleMeasure::atomic(std::vector<Atom> points) {
  return piecewise({}, std::move(points));
}

CircleMeasure CircleMeasure::piecewise(std::vector<Piece> pieces, std::vector<Atom> atoms) {
  CircleMeasure mu;
  mu.pieces_ = std::move(pieces);
  mu.atoms_ = std::move(atoms);
  mu.signed_ = false;
  mu.finalize();
  return mu;
}

CircleMeasure CircleMeasure::signed_density(std::vector<Piece> pieces) {
  CircleMeasure mu;
  mu.pieces_ = std::move(pieces);
  mu.signed_ = true;
  mu.finalize();
  return mu;
}

CircleMeasure CircleMeasure::dyadic_density(int depth, std::vector<double> densities) {
  if (depth < 0 || depth > kMaxDepth) throw std::invalid_argument("dyadic_density: depth out of range");
  if (densities.size() != (std::size_t{1} << depth))
    throw std::invalid_argument("dyadic_density: expected 2^depth densities");
  std::vector<Piece> pieces(densities.size());
  for (std::size_t k = 0; k < densities.size(); ++k)
    pieces[k] = {std::ldexp(static_cast<double>(k), -depth), std::ldexp(static_cast<double>(k + 1), -depth),
                 densities[k]};
  return piecewise(std::move(pieces));
}

void CircleMeasure::finalize() {
  std::sort(pieces_.begin(), pieces_.end(), [](const Piece& p, const Piece& q) { return p.a < q.a; });
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    const Piece& p = pieces_[k];
    if (!(p.a >= 0.0 && p.a < p.b && p.b <= 1.0))
      throw std::invalid_argument("piece [" + std::to_string(p.a) + ", " + std::to_string(p.b) +
                                  ") is not a nonempty subinterval of [0,1]");
    if (!std::isfinite(p.density)) throw std::invalid_argument("piece density must be finite");
    if (!signed_ && p.density < 0.0) throw std::invalid_argument("piece density must be nonnegative");
    if (k > 0 && pieces_[k - 1].b > p.a) throw std::invalid_argument("pieces overlap");
  }

  std::map<double, double> merged;
  for (const Atom& at : atoms_) {
    if (!(at.mass > 0.0) || !std::isfinite(at.mass)) throw std::invalid_argument("atom masses must be positive");
    if (!std::isfinite(at.x)) throw std::invalid_argument("atom position must be finite");
    merged[wrap01(at.x)] += at.mass;
  }
  atoms_.clear();
  for (const auto& [x, m] : merged) atoms_.push_back({x, m});

  piece_prefix_.assign(pieces_.size() + 1, 0.0);
  for (std::size_t k = 0; k < pieces_.size(); ++k)
    piece_prefix_[k + 1] = piece_prefix_[k] + pieces_[k].density * (pieces_[k].b - pieces_[k].a);
  atom_prefix_.assign(atoms_.size() + 1, 0.0);
  for (std::size_t k = 0; k < atoms_.size(); ++k) atom_prefix_[k + 1] = atom_prefix_[k] + atoms_[k].mass;
  total_ = piece_prefix_.back() + atom_prefix_.back();

  grid_.reset();
  if (!pieces_.empty()) {
    int depth = 0;
    for (const Piece& p : pieces_) {
      int da = dyadic_order(p.a), db = dyadic_order(p.b);
      if (da < 0 || db < 0) {
        depth = -1;
        break;
      }
      depth = std::max({depth, da, db});
    }
    if (depth >= 0) {
      UniformGrid g;
      g.depth = depth;
      g.density.assign(std::size_t{1} << depth, 0.0);
      for (const Piece& p : pieces_) {
        auto lo = static_cast<std::size_t>(std::ldexp(p.a, depth));
        auto hi = static_cast<std::size_t>(std::ldexp(p.b, depth));
        for (std::size_t k = lo; k < hi; ++k) g.density[k] = p.density;
      }
      grid_ = std::move(g);
    }
  }
}

double CircleMeasure::max_density() const {
  double m = 0.0;
  for (const Piece& p : pieces_) m = std::max(m, std::abs(p.density));
  return m;
}

double CircleMeasure::density_mass_below(double x) const {
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x, [](double v, const Piece& p) { return v < p.a; });
  if (it == pieces_.begin()) return 0.0;
  auto k = static_cast<std::size_t>(it - pieces_.begin()) - 1;
  const Piece& p = pieces_[k];
  return piece_prefix_[k] + p.density * (std::min(x, p.b) - p.a);
}

double CircleMeasure::atom_mass_below(double x, bool inclusive) const {
  auto it = inclusive
                ? std::upper_bound(atoms_.begin(), atoms_.end(), x, [](double v, const Atom& a) { return v < a.x; })
                : std::lower_bound(atoms_.begin(), atoms_.end(), x, [](const Atom& a, double v) { return a.x < v; });
  return atom_prefix_[static_cast<std::size_t>(it - atoms_.begin())];
}

double CircleMeasure::mass(double a, double b) const {
  if (!(0.0 <= a && a <= b && b <= 1.0)) throw std::invalid_argument("mass: need 0 <= a <= b <= 1");
  return density_mass_below(b) - density_mass_below(a) + atom_mass_below(b, false) - atom_mass_below(a, false);
}

double CircleMeasure::arc_mass(double x, double len, bool closed) const {
  if (len < 0.0) throw std::invalid_argument("arc_mass: negative length");
  if (len >= 1.0) return total_;
  const double a = wrap01(x);
  const double end = a + len;
  auto segment = [&](double lo, double hi, bool hi_inclusive) {
    return density_mass_below(hi) - density_mass_below(lo) + atom_mass_below(hi, hi_inclusive) -
           atom_mass_below(lo, false);
  };
  if (end <= 1.0) {
    if (end == 1.0) return segment(a, 1.0, false) + (closed ? atom_mass_below(0.0, true) : 0.0);
    return segment(a, end, closed);
  }
  return segment(a, 1.0, false) + segment(0.0, end - 1.0, closed);
}

std::vector<double> CircleMeasure::dyadic_masses(int n) const {
  if (n < 0 || n > kMaxDepth) throw std::invalid_argument("dyadic_masses: generation out of range");
  const std::size_t cells = std::size_t{1} << n;
  std::vector<double> out(cells, 0.0);
  const double scale = std::ldexp(1.0, n);
  for (const Piece& p : pieces_) {
    auto lo = static_cast<std::size_t>(std::floor(p.a * scale));
    auto hi = std::min(cells, static_cast<std::size_t>(std::ceil(p.b * scale)));
    for (std::size_t k = lo; k < hi; ++k) {
      double cl = std::ldexp(static_cast<double>(k), -n), cr = std::ldexp(static_cast<double>(k + 1), -n);
      double overlap = std::min(cr, p.b) - std::max(cl, p.a);
      if (overlap > 0.0) out[k] += p.density * overlap;
    }
  }
  for (const Atom& at : atoms_) out[static_cast<std::size_t>(interval_containing(at.x, n).index)] += at.mass;
  return out;
}

std::vector<double> CircleMeasure::breakpoints() const {
  std::vector<double> b;
  b.reserve(2 * pieces_.size() + atoms_.size());
  for (const Piece& p : pieces_) {
    b.push_back(p.a);
    b.push_back(wrap01(p.b));
  }
  for (const Atom& at : atoms_) b.push_back(at.x);
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return b;
}

DyadicMartingale martingale_from_measure(const CircleMeasure& mu, int depth) {
  if (mu.is_signed()) throw std::invalid_argument("martingale_from_measure requires a positive measure");
  if (depth < 0 || depth > kMaxDepth) throw std::invalid_argument("martingale depth out of range");
  std::vector<double> values((std::size_t{1} << (depth + 1)) - 1);
  std::vector<double> masses = mu.dyadic_masses(depth);
  std::size_t base = (std::size_t{1} << depth) - 1;
  for (std::size_t j = 0; j < masses.size(); ++j) values[base + j] = std::ldexp(masses[j], depth);
  for (int n = depth - 1; n >= 0; --n) {
    std::vector<double> up(masses.size() / 2);
    for (std::size_t j = 0; j < up.size(); ++j) up[j] = masses[2 * j] + masses[2 * j + 1];
    masses.swap(up);
    base = (std::size_t{1} << n) - 1;
    for (std::size_t j = 0; j < masses.size(); ++j) values[base + j] = std::ldexp(masses[j], n);
  }
  return DyadicMartingale(depth, std::move(values));
}

}  // namespace cyclia
