#include "cyclia/function_model.hpp"

#include <cmath>
#include <sstream>
#include <variant>

#include "phase.hpp"

namespace cyclia {

namespace {

void require_interior(cplx z) {
  if (!(std::abs(z) < 1.0)) throw std::domain_error("function models are evaluated for |z| < 1");
}

}  // namespace

struct FunctionModel::Node {
  struct Singular {
    std::shared_ptr<const HerglotzEvaluator> h;
    double alpha;
  };
  struct Log {
    std::shared_ptr<const HerglotzEvaluator> h;
  };
  struct Outer {
    std::shared_ptr<const HerglotzEvaluator> h;
  };
  struct Poly {
    std::vector<cplx> c;
  };
  struct Dilate {
    FunctionModel f;
    double t;
  };
  struct Product {
    std::vector<FunctionModel> f;
  };
  struct Quotient {
    FunctionModel num, den;
  };
  std::variant<Singular, Log, Outer, Poly, Dilate, Product, Quotient> v;
};

FunctionModel FunctionModel::singular_inner(std::shared_ptr<const HerglotzEvaluator> mu, double alpha) {
  if (!mu) throw std::invalid_argument("singular_inner: null measure");
  if (mu->measure().is_signed()) throw std::invalid_argument("singular_inner needs a positive measure");
  if (!(alpha > 0.0)) throw std::invalid_argument("singular_inner: alpha must be positive");
  return FunctionModel(std::make_shared<Node>(Node{Node::Singular{std::move(mu), alpha}}));
}

FunctionModel FunctionModel::singular_inner(const CircleMeasure& mu, double alpha) {
  return singular_inner(std::make_shared<HerglotzEvaluator>(mu), alpha);
}

FunctionModel FunctionModel::log_singular_inner(std::shared_ptr<const HerglotzEvaluator> mu) {
  if (!mu) throw std::invalid_argument("log_singular_inner: null measure");
  return FunctionModel(std::make_shared<Node>(Node{Node::Log{std::move(mu)}}));
}

FunctionModel FunctionModel::log_singular_inner(const CircleMeasure& mu) {
  return log_singular_inner(std::make_shared<HerglotzEvaluator>(mu));
}

FunctionModel FunctionModel::outer(const CircleMeasure& log_modulus) {
  if (!log_modulus.atoms().empty()) throw std::invalid_argument("outer: log-modulus data must be a density");
  return FunctionModel(std::make_shared<Node>(Node{Node::Outer{std::make_shared<HerglotzEvaluator>(log_modulus)}}));
}

FunctionModel FunctionModel::polynomial(std::vector<cplx> coefficients) {
  if (coefficients.empty()) coefficients.push_back(0.0);
  return FunctionModel(std::make_shared<Node>(Node{Node::Poly{std::move(coefficients)}}));
}

FunctionModel FunctionModel::dilate(FunctionModel f, double t) {
  if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("dilate: t must lie in (0,1)");
  return FunctionModel(std::make_shared<Node>(Node{Node::Dilate{std::move(f), t}}));
}

FunctionModel FunctionModel::product(std::vector<FunctionModel> factors) {
  if (factors.empty()) throw std::invalid_argument("product: no factors");
  return FunctionModel(std::make_shared<Node>(Node{Node::Product{std::move(factors)}}));
}

FunctionModel FunctionModel::quotient(FunctionModel numerator, FunctionModel denominator) {
  return FunctionModel(std::make_shared<Node>(Node{Node::Quotient{std::move(numerator), std::move(denominator)}}));
}

cplx FunctionModel::eval(cplx z) const { return jet(z).value; }
cplx FunctionModel::deriv(cplx z) const { return jet(z).derivative; }

Jet FunctionModel::jet(cplx z) const {
  require_interior(z);
  return std::visit(
      [&](const auto& n) -> Jet {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Node::Singular>) {
          const cplx h = n.h->value(z), dh = n.h->derivative(z);
          const cplx v = std::exp(-n.alpha * h);
          return {v, -n.alpha * dh * v};
        } else if constexpr (std::is_same_v<T, Node::Log>) {
          return {-n.h->value(z), -n.h->derivative(z)};
        } else if constexpr (std::is_same_v<T, Node::Outer>) {
          const cplx v = std::exp(n.h->value(z));
          return {v, n.h->derivative(z) * v};
        } else if constexpr (std::is_same_v<T, Node::Poly>) {
          cplx v = 0.0, d = 0.0;
          for (std::size_t k = n.c.size(); k-- > 0;) {
            d = d * z + v;
            v = v * z + n.c[k];
          }
          return {v, d};
        } else if constexpr (std::is_same_v<T, Node::Dilate>) {
          const Jet j = n.f.jet(n.t * z);
          return {j.value, n.t * j.derivative};
        } else if constexpr (std::is_same_v<T, Node::Product>) {
          Jet acc{1.0, 0.0};
          for (const FunctionModel& f : n.f) {
            const Jet j = f.jet(z);
            acc = {acc.value * j.value, acc.derivative * j.value + acc.value * j.derivative};
          }
          return acc;
        } else {
          const Jet a = n.num.jet(z), b = n.den.jet(z);
          if (b.value == 0.0) throw SingularEvaluationError("quotient: denominator vanishes");
          return {a.value / b.value, (a.derivative * b.value - a.value * b.derivative) / (b.value * b.value)};
        }
      },
      node_->v);
}

RingJet FunctionModel::ring(double r, std::size_t samples, double phase) const {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("ring radius must lie in [0, 1)");
  return std::visit(
      [&](const auto& n) -> RingJet {
        using T = std::decay_t<decltype(n)>;
        RingJet out;
        out.radius = r;
        out.phase = phase;
        if constexpr (std::is_same_v<T, Node::Singular> || std::is_same_v<T, Node::Log> ||
                      std::is_same_v<T, Node::Outer>) {
          RingValues h = n.h->ring(r, samples, phase, true);
          out.value = std::move(h.value);
          out.derivative = std::move(h.derivative);
          for (std::size_t m = 0; m < samples; ++m) {
            if constexpr (std::is_same_v<T, Node::Singular>) {
              const cplx v = std::exp(-n.alpha * out.value[m]);
              out.derivative[m] = -n.alpha * out.derivative[m] * v;
              out.value[m] = v;
            } else if constexpr (std::is_same_v<T, Node::Log>) {
              out.value[m] = -out.value[m];
              out.derivative[m] = -out.derivative[m];
            } else {
              const cplx v = std::exp(out.value[m]);
              out.derivative[m] *= v;
              out.value[m] = v;
            }
          }
        } else if constexpr (std::is_same_v<T, Node::Dilate>) {
          out = n.f.ring(n.t * r, samples, phase);
          out.radius = r;
          for (cplx& d : out.derivative) d *= n.t;
        } else if constexpr (std::is_same_v<T, Node::Product>) {
          out.value.assign(samples, 1.0);
          out.derivative.assign(samples, 0.0);
          for (const FunctionModel& f : n.f) {
            const RingJet j = f.ring(r, samples, phase);
            for (std::size_t m = 0; m < samples; ++m) {
              out.derivative[m] = out.derivative[m] * j.value[m] + out.value[m] * j.derivative[m];
              out.value[m] *= j.value[m];
            }
          }
        } else if constexpr (std::is_same_v<T, Node::Quotient>) {
          const RingJet a = n.num.ring(r, samples, phase), b = n.den.ring(r, samples, phase);
          out.value.resize(samples);
          out.derivative.resize(samples);
          for (std::size_t m = 0; m < samples; ++m) {
            if (b.value[m] == 0.0) throw SingularEvaluationError("quotient: denominator vanishes on the ring");
            out.value[m] = a.value[m] / b.value[m];
            out.derivative[m] =
                (a.derivative[m] * b.value[m] - a.value[m] * b.derivative[m]) / (b.value[m] * b.value[m]);
          }
        } else {
          out.value.resize(samples);
          out.derivative.resize(samples);
          const double inv = 1.0 / static_cast<double>(samples);
          for (std::size_t m = 0; m < samples; ++m) {
            const Jet j = jet(r * detail::cis2pi(static_cast<double>(m) * inv + phase));
            out.value[m] = j.value;
            out.derivative[m] = j.derivative;
          }
        }
        return out;
      },
      node_->v);
}

std::optional<double> FunctionModel::sup_bound() const {
  return std::visit(
      [&](const auto& n) -> std::optional<double> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Node::Singular>) {
          return 1.0;
        } else if constexpr (std::is_same_v<T, Node::Log>) {
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, Node::Outer>) {
          double top = 0.0;
          for (const Piece& p : n.h->measure().pieces()) top = std::max(top, p.density);
          return std::exp(top);
        } else if constexpr (std::is_same_v<T, Node::Poly>) {
          double s = 0.0;
          for (cplx c : n.c) s += std::abs(c);
          return s;
        } else if constexpr (std::is_same_v<T, Node::Dilate>) {
          return n.f.sup_bound();
        } else if constexpr (std::is_same_v<T, Node::Product>) {
          double s = 1.0;
          for (const FunctionModel& f : n.f) {
            auto b = f.sup_bound();
            if (!b) return std::nullopt;
            s *= *b;
          }
          return s;
        } else {
          return std::nullopt;
        }
      },
      node_->v);
}

std::optional<double> FunctionModel::coefficient_bound() const {
  return std::visit(
      [&](const auto& n) -> std::optional<double> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Node::Log>) {
          return 2.0 * std::abs(n.h->measure().total_mass());
        } else if constexpr (std::is_same_v<T, Node::Poly>) {
          double s = 0.0;
          for (cplx c : n.c) s = std::max(s, std::abs(c));
          return s;
        } else if constexpr (std::is_same_v<T, Node::Dilate>) {
          return n.f.coefficient_bound();
        } else {
          return sup_bound();
        }
      },
      node_->v);
}

double FunctionModel::conditioning(cplx z) const {
  require_interior(z);
  return std::visit(
      [&](const auto& n) -> double {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Node::Singular>) {
          return n.alpha * std::abs(n.h->value(z).real());
        } else if constexpr (std::is_same_v<T, Node::Log> || std::is_same_v<T, Node::Outer>) {
          return std::abs(n.h->value(z).real());
        } else if constexpr (std::is_same_v<T, Node::Poly>) {
          return 0.0;
        } else if constexpr (std::is_same_v<T, Node::Dilate>) {
          return n.f.conditioning(n.t * z);
        } else if constexpr (std::is_same_v<T, Node::Product>) {
          double s = 0.0;
          for (const FunctionModel& f : n.f) s += f.conditioning(z);
          return s;
        } else {
          return n.num.conditioning(z) + n.den.conditioning(z);
        }
      },
      node_->v);
}

std::string FunctionModel::describe() const {
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        std::ostringstream os;
        os.precision(17);
        if constexpr (std::is_same_v<T, Node::Singular>) {
          os << "S_mu^" << n.alpha;
        } else if constexpr (std::is_same_v<T, Node::Log>) {
          os << "log S_mu";
        } else if constexpr (std::is_same_v<T, Node::Outer>) {
          os << "outer";
        } else if constexpr (std::is_same_v<T, Node::Poly>) {
          os << "polynomial(degree " << n.c.size() - 1 << ")";
        } else if constexpr (std::is_same_v<T, Node::Dilate>) {
          os << "dilate(" << n.f.describe() << ", " << n.t << ")";
        } else if constexpr (std::is_same_v<T, Node::Product>) {
          os << "product(";
          for (std::size_t k = 0; k < n.f.size(); ++k) os << (k ? ", " : "") << n.f[k].describe();
          os << ")";
        } else {
          os << "quotient(" << n.num.describe() << ", " << n.den.describe() << ")";
        }
        return os.str();
      },
      node_->v);
}

}  // namespace cyclia
