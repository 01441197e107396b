#pragma once

#include <optional>
#include <vector>

#include "cyclia/dyadic.hpp"

namespace cyclia {

struct Atom {
  double x = 0.0;
  double mass = 0.0;
};

// Constant density on [a, b) with 0 <= a < b <= 1.
struct Piece {
  double a = 0.0;
  double b = 0.0;
  double density = 0.0;
};

// Piecewise-constant density on the 2^depth dyadic cells of [0,1).
struct UniformGrid {
  int depth = 0;
  std::vector<double> density;
};

class CircleMeasure {
 public:
  CircleMeasure() = default;

  static CircleMeasure lebesgue(double total_mass);
  static CircleMeasure atomic(std::vector<Atom> points);
  static CircleMeasure piecewise(std::vector<Piece> pieces, std::vector<Atom> atoms = {});
  static CircleMeasure dyadic_density(int depth, std::vector<double> densities);
  // Real-valued density without the positivity requirement (outer-function data).
  static CircleMeasure signed_density(std::vector<Piece> pieces);

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  bool is_signed() const { return signed_; }

  double total_mass() const { return total_; }
  double max_density() const;

  // mu([a,b)) for 0 <= a <= b <= 1.
  double mass(double a, double b) const;
  // Mass of the arc starting at x (mod 1) of length len in [0,1]; closed includes both endpoints.
  double arc_mass(double x, double len, bool closed) const;

  std::vector<double> dyadic_masses(int n) const;
  const std::optional<UniformGrid>& uniform_grid() const { return grid_; }

  // Sorted distinct positions of atoms and piece endpoints in [0,1).
  std::vector<double> breakpoints() const;

 private:
  void finalize();
  double density_mass_below(double x) const;  // integral of the density over [0,x)
  double atom_mass_below(double x, bool inclusive) const;

  std::vector<Atom> atoms_;
  std::vector<Piece> pieces_;
  std::vector<double> piece_prefix_;  // piece_prefix_[k] = mass of pieces_[0..k)
  std::vector<double> atom_prefix_;
  bool signed_ = false;
  double total_ = 0.0;
  std::optional<UniformGrid> grid_;
};

DyadicMartingale martingale_from_measure(const CircleMeasure& mu, int depth);

}  // namespace cyclia
