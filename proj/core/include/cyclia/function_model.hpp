#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclia/herglotz.hpp"

namespace cyclia {

class SingularEvaluationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Jet {
  cplx value;
  cplx derivative;
};

struct RingJet {
  double radius = 0.0;
  double phase = 0.0;
  std::vector<cplx> value;
  std::vector<cplx> derivative;
};

// Immutable evaluation tree of an analytic function on the disc.
class FunctionModel {
 public:
  // exp(-alpha H_mu)
  static FunctionModel singular_inner(std::shared_ptr<const HerglotzEvaluator> mu, double alpha = 1.0);
  static FunctionModel singular_inner(const CircleMeasure& mu, double alpha = 1.0);
  // -H_mu, the canonical logarithm of S_mu
  static FunctionModel log_singular_inner(std::shared_ptr<const HerglotzEvaluator> mu);
  static FunctionModel log_singular_inner(const CircleMeasure& mu);
  // exp(H_g) for signed log-modulus data g
  static FunctionModel outer(const CircleMeasure& log_modulus);
  static FunctionModel polynomial(std::vector<cplx> coefficients);
  static FunctionModel dilate(FunctionModel f, double t);
  static FunctionModel product(std::vector<FunctionModel> factors);
  static FunctionModel quotient(FunctionModel numerator, FunctionModel denominator);

  cplx eval(cplx z) const;
  cplx deriv(cplx z) const;
  Jet jet(cplx z) const;
  // Samples at r e^{2 pi i (m/M + phase)}, m = 0..M-1.
  RingJet ring(double r, std::size_t samples, double phase = 0.0) const;

  // Upper bound for |f| on the disc when one is known.
  std::optional<double> sup_bound() const;
  // Upper bound for every Maclaurin coefficient when one is known.
  std::optional<double> coefficient_bound() const;
  // Size of the exponent driving the evaluation (sum of alpha P_mu over singular factors).
  double conditioning(cplx z) const;
  std::string describe() const;

  struct Node;

 private:
  explicit FunctionModel(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace cyclia
