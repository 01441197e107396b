#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cyclia/diagnostics.hpp"

namespace cyclia {
namespace {

constexpr double kPi = std::numbers::pi;

const CircleMeasure& lebesgue() {
  static const CircleMeasure m = CircleMeasure::lebesgue(1.0);
  return m;
}

const CircleMeasure& atom() {
  static const CircleMeasure m = CircleMeasure::atomic({{0.0, 1.0}});
  return m;
}

TEST(CheckReport, DecideAndSerialize) {
  CheckReport r;
  r.name = "demo";
  r.statement = "x <= y";
  CheckRow row;
  row.inputs = {{"t", 0.1}};
  row.lhs = 1.0 / 3.0;
  row.rhs = 2.0;
  row.ratio = 1.0 / 6.0;
  row.extra = {{"e", 7.0}};
  r.rows.push_back(row);
  r.worst_ratio = 0.5;
  r.threshold = 1.0;
  r.decide();
  EXPECT_EQ(r.verdict, Verdict::pass);
  const auto j = to_json(r);
  EXPECT_EQ(j.at("name"), "demo");
  EXPECT_EQ(j.at("verdict"), "pass");
  EXPECT_FALSE(j.contains("runtime_seconds"));
  const std::string csv = to_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,lhs,rhs,ratio,e");
  EXPECT_NE(csv.find("0.33333333333333331"), std::string::npos);
  EXPECT_EQ(std::stod(format_double(0.1)), 0.1);
  EXPECT_EQ(format_double(std::nan("")), "nan");
  CheckReport empty;
  EXPECT_THROW(empty.decide(), std::logic_error);
}

TEST(Diagnostics, PmeansLebesguePasses) {
  const std::vector<double> r{0.9, 0.99, 0.999};
  const CheckReport rep = pmean_ratio(lebesgue(), SmoothnessProfile::log_power(1.0, 0.5), 3.0, r);
  EXPECT_EQ(rep.verdict, Verdict::pass);
  // |S|^-p = e^{p}: lhs = log(2 pi e^3).
  for (const auto& row : rep.rows) EXPECT_NEAR(row.lhs, 3.0 + std::log(2 * kPi), 1e-10);
}

TEST(Diagnostics, PoissonMartingaleLebesgue) {
  const CheckReport rep = poisson_martingale_gap(lebesgue(), 8);
  EXPECT_EQ(rep.verdict, Verdict::pass);
  for (const auto& row : rep.rows) EXPECT_NEAR(row.ratio, 0.0, 1e-10);
}

TEST(Diagnostics, PoissonMartingaleAtomRatio) {
  // P at the box centre of the atom's cell is a fixed fraction of M = 2^n.
  const CheckReport rep = poisson_martingale_gap(atom(), 10);
  const double r = 1.0 - 0.75 * std::ldexp(1.0, -10);
  const double x = 0.5 * std::ldexp(1.0, -10);
  const double p = (1 - r * r) / std::norm(std::polar(1.0, 0.0) - std::polar(r, 2 * kPi * x));
  EXPECT_NEAR(rep.rows.back().lhs, p, 1e-9 * p);
}

TEST(Diagnostics, KorenblumVerdicts) {
  const CheckReport a = korenblum_necessity(atom(), IntervalSet::points({0.0}));
  EXPECT_EQ(a.verdict, Verdict::fail);
  bool noted = false;
  for (const auto& n : a.notes) noted = noted || n.find("not cyclic") != std::string::npos;
  EXPECT_TRUE(noted);
  EXPECT_EQ(korenblum_necessity(lebesgue(), IntervalSet::points({})).verdict, Verdict::pass);
}

TEST(Diagnostics, AnnihilatorPairingAgainstBoundaryIntegral) {
  const CircleMeasure mu = CircleMeasure::atomic({{0.0, 1.0}, {0.4, 0.5}});
  const FunctionModel s = FunctionModel::singular_inner(mu);
  const cplx s0 = s.eval(0.0);
  const double r = 0.6;
  for (int m : {0, 2}) {
    // Oracle: r int_0^{2 pi} (r e^{i t})^m S conj((S - S(0)) / (r e^{i t})) dt by the trapezoid rule.
    const int n = 4096;
    cplx sum = 0.0;
    for (int k = 0; k < n; ++k) {
      const cplx z = std::polar(r, 2 * kPi * k / n);
      sum += std::pow(z, m) * s.eval(z) * std::conj((s.eval(z) - s0) / z);
    }
    const cplx oracle = r * sum * (2 * kPi / n);
    const AnnihilatorPairing a = annihilator_pairing(s, m, 200, r);
    EXPECT_NEAR(std::abs(a.value - oracle), 0.0, 1e-10);
    EXPECT_LT(a.truncation_bound, 1e-40);
  }
  // For S = z the pairing vanishes identically.
  const AnnihilatorPairing z = annihilator_pairing(FunctionModel::polynomial({0.0, 1.0}), 0, 16, 0.9);
  EXPECT_NEAR(std::abs(z.value), 0.0, 1e-14);
}

TEST(Diagnostics, BlochDifferenceOfIdentity) {
  const FunctionModel z = FunctionModel::polynomial({0.0, 1.0});
  const std::vector<double> t{0.5, 0.9};
  const CheckReport rep = bloch_difference_bound(z, z, 2.0, t);
  // 2 pi (1-t)^2 int r^3 (1-r) dr = 2 pi (1-t)^2 / 20.
  for (std::size_t k = 0; k < t.size(); ++k)
    EXPECT_NEAR(rep.rows[k].lhs, 2 * kPi * std::pow(1 - t[k], 2) / 20.0, 1e-8);
  EXPECT_NEAR(rep.rows[0].rhs, kPi / 3.0, 1e-8);
}

TEST(Diagnostics, BrownShieldsOnPolynomialIsBounded) {
  const FunctionModel f = FunctionModel::polynomial({1.0, 0.5});
  const std::vector<double> t{0.5, 0.9, 0.99};
  EXPECT_EQ(brown_shields_table(f, 3.0, t).verdict, Verdict::pass);
}

TEST(Diagnostics, FourierChecks) {
  const CheckReport a = fourier_decay_fit(atom(), 1024, 0.8, 0.05);
  EXPECT_DOUBLE_EQ(a.worst_ratio, 0.0);
  EXPECT_EQ(a.verdict, Verdict::fail);
  EXPECT_THROW(fourier_decay_fit(lebesgue(), 1024, 0.8, 0.05), std::invalid_argument);
  EXPECT_THROW(fourier_decay_fit(atom(), 32, 0.8, 0.05), std::invalid_argument);
  EXPECT_EQ(fourier_lp_summability(atom(), 4.0, 4096).verdict, Verdict::fail);
  const CheckReport l = fourier_lp_summability(lebesgue(), 4.0, 4096);
  EXPECT_EQ(l.verdict, Verdict::pass);
  EXPECT_NEAR(l.rows.back().lhs, 1.0, 1e-14);
}

TEST(Diagnostics, SmoothMeasureChecksOnLebesgue) {
  const std::vector<double> r{0.9, 0.99};
  const SmoothnessProfile phi = SmoothnessProfile::log_power(1.0, 0.5);
  EXPECT_EQ(derivative_sup_ratio(lebesgue(), phi, r).verdict, Verdict::pass);
  QuadratureGrid g;
  g.panels = 8;
  EXPECT_EQ(multiplier_log_onebox(lebesgue(), 3.0, 6, g).verdict, Verdict::pass);
  EXPECT_EQ(derivative_sup_ratio(atom(), phi, std::vector<double>{0.9, 0.99, 0.999, 0.9999}).verdict, Verdict::fail);
}

TEST(Diagnostics, IntegrabilityCheck) {
  const SmoothnessProfile phi = SmoothnessProfile::log_power(1.0, 0.5);
  EXPECT_EQ(integrability_check(phi, 3.0, 0.05).verdict, Verdict::pass);
  EXPECT_EQ(integrability_check(phi, 3.0, 0.8).verdict, Verdict::fail);
}

}  // namespace
}  // namespace cyclia
