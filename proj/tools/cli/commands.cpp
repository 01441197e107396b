#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "cyclia/diagnostics.hpp"
#include "cyclia/fourier.hpp"
#include "cyclia/moduli.hpp"

namespace cyclia::cli {

namespace {

using nlohmann::json;

const std::vector<double> kRadii{0.9, 0.99, 0.999, 0.9999, 0.99999};
const std::vector<double> kDilations{0.5, 0.9, 0.99, 0.999};

std::vector<double> grid_or(const RunConfig& c, const std::vector<double>& fallback) {
  return c.grid ? c.grid->values() : fallback;
}

SmoothnessProfile profile_of(const MeasureBundle& b) {
  return b.phi ? *b.phi : SmoothnessProfile::log_power(1.0, 0.5);
}

std::int64_t coefficient_count(const RunConfig& c) {
  const int k = c.depth.value_or(12);
  if (k < 6 || k > 22) throw ConfigError("--depth: Fourier checks need 6 <= depth <= 22");
  return std::int64_t{1} << k;
}

double salem_alpha(const MeasureBundle& b, const RunConfig& c) {
  if (c.alpha) return *c.alpha;
  return b.salem ? b.salem->spec.alpha : 0.8;
}

double salem_epsilon(const MeasureBundle& b, const RunConfig& c) {
  if (c.epsilon) return *c.epsilon;
  return b.salem ? b.salem->spec.epsilon : 0.05;
}

CheckReport with_tolerance(CheckReport r, const RunConfig& c) {
  if (c.tolerance) {
    r.threshold = *c.tolerance;
    r.decide();
  }
  return r;
}

std::vector<double> dyadic_lengths(int k_max) {
  std::vector<double> t;
  for (int k = 1; k <= k_max; ++k) t.push_back(std::ldexp(1.0, -k));
  return t;
}

int modulus_depth(const MeasureBundle& b, const RunConfig& c) {
  if (c.depth) return std::clamp(*c.depth, 1, 22);
  if (b.measure.uniform_grid()) return std::clamp(b.measure.uniform_grid()->depth, 1, 22);
  return 20;
}

std::string csv_line(std::initializer_list<std::string> cells) {
  std::string s;
  bool first = true;
  for (const auto& c : cells) {
    if (!first) s += ',';
    s += c;
    first = false;
  }
  return s + '\n';
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

std::vector<std::string> write_measure_files(const MeasureBundle& b, const RunConfig& c,
                                             const std::filesystem::path& dir) {
  std::vector<std::string> files;
  std::filesystem::create_directories(dir);

  std::string dump = csv_line({"kind", "a", "b", "value"});
  for (const Piece& p : b.measure.pieces())
    dump += csv_line({"piece", format_double(p.a), format_double(p.b), format_double(p.density)});
  for (const Atom& a : b.measure.atoms())
    dump += csv_line({"atom", format_double(a.x), format_double(a.x), format_double(a.mass)});
  write_atomic(dir / "measure.csv", dump);
  files.push_back("measure.csv");

  const SmoothnessProfile phi = profile_of(b);
  const std::vector<double> t = grid_or(c, dyadic_lengths(modulus_depth(b, c)));
  const std::vector<double> delta = modulus_continuity(b.measure, t);
  const std::vector<double> omega = modulus_smoothness(b.measure, t);
  std::string moduli = csv_line({"t", "delta", "omega", "omega_over_t_phi", "fitted_C"});
  double fitted = 0.0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    const double ratio = omega[k] / (t[k] * phi(t[k]));
    fitted = std::max(fitted, ratio);
    moduli += csv_line({format_double(t[k]), format_double(delta[k]), format_double(omega[k]), format_double(ratio),
                        format_double(fitted)});
  }
  write_atomic(dir / "moduli.csv", moduli);
  files.push_back("moduli.csv");

  const auto hat = fourier_coefficients(b.measure, coefficient_count(c));
  std::string fourier = csv_line({"n", "re", "im", "abs"});
  for (std::size_t n = 0; n < hat.size(); ++n)
    fourier += csv_line({std::to_string(n), format_double(hat[n].real()), format_double(hat[n].imag()),
                         format_double(std::abs(hat[n]))});
  write_atomic(dir / "fourier.csv", fourier);
  files.push_back("fourier.csv");

  if (b.support) {
    const EntropyReport e = bc_entropy(*b.support);
    json j = {{"entropy", e.total},
              {"gap_count", e.gap_count},
              {"generation_subtotals", e.generation_subtotal},
              {"subtotal_ratio", e.subtotal_ratio},
              {"verdict", to_string(e.verdict)},
              {"note", e.note},
              {"support_length", b.support->arc_length()},
              {"mass_on_support", measure_of_set(b.measure, *b.support)}};
    write_atomic(dir / "entropy.json", dump_json(j));
    files.push_back("entropy.json");
  }
  return files;
}

std::vector<std::string> write_report(const CheckReport& r, const MeasureBundle& b, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  json j = to_json(r);
  j["measure"] = b.spec;
  write_atomic(dir / (r.name + ".json"), dump_json(j));
  write_atomic(dir / (r.name + ".csv"), to_csv(r));
  return {r.name + ".json", r.name + ".csv"};
}

MeasureBundle bundle_for(const RunConfig& c, const std::string& topic) {
  const json spec = c.spec.empty() ? default_spec(topic) : load_spec_text(c.spec);
  return build_measure(spec, c.seed);
}

struct Preset {
  std::string name;
  std::string result;
  bool with_measure = false;
  std::vector<std::string> checks;
};

const std::vector<Preset>& presets() {
  static const std::vector<Preset> p{
      {"theorem-main", "main theorem: omega_mu(t) <= C t / sqrt(log(e/t)) implies S_mu cyclic in D^p_{p-1}, p > 2",
       false, {"anderson", "derivative-sup", "multiplier", "pmeans", "brown-shields"}},
      {"theorem-power", "power theorem: phi-smooth mu with the main integrability hypothesis has a cyclic power S_mu^alpha",
       false, {"integrability", "poisson-martingale", "pmeans", "brown-shields"}},
      {"theorem-necessity", "necessity theorem: S_mu cyclic in l^p_A, p > 2, forces mu(E) = 0 on Beurling-Carleson sets",
       false, {"korenblum", "anderson"}},
      {"salem", "logarithmic theorem: a Salem-type measure with l^p Fourier coefficients that is not cyclic", true,
       {"fourier-decay", "fourier-lp", "korenblum"}},
  };
  return p;
}

const Preset& find_preset(const std::string& name) {
  for (const Preset& p : presets())
    if (p.name == name) return p;
  std::string list;
  for (const auto& n : preset_names()) list += (list.empty() ? "" : ", ") + n;
  throw ConfigError("unknown preset '" + name + "'; available: " + list);
}

}  // namespace

const std::vector<CheckEntry>& check_registry() {
  static const std::vector<CheckEntry> checks{
      {"anderson", "moduli of continuity and smoothness of mu",
       [](const MeasureBundle& b, const RunConfig& c) {
         return with_tolerance(anderson_check(b.measure, grid_or(c, dyadic_lengths(modulus_depth(b, c)))), c);
       }},
      {"derivative-sup", "pointwise derivative bound for S_mu under phi-smoothness",
       [](const MeasureBundle& b, const RunConfig& c) {
         return with_tolerance(derivative_sup_ratio(b.measure, profile_of(b), grid_or(c, kRadii)), c);
       }},
      {"multiplier", "multiplier proposition: log-weighted one-box Carleson condition",
       [](const MeasureBundle& b, const RunConfig& c) {
         const int g = c.depth.value_or(12);
         return with_tolerance(multiplier_log_onebox(b.measure, c.p.value_or(3.0), g, {}, g / 2), c);
       }},
      {"pmeans", "corollary on integral means of 1/|S_mu|^p",
       [](const MeasureBundle& b, const RunConfig& c) {
         return with_tolerance(pmean_ratio(b.measure, profile_of(b), c.p.value_or(3.0), grid_or(c, kRadii)), c);
       }},
      {"brown-shields", "dilation criterion for cyclicity of S_mu^alpha",
       [](const MeasureBundle& b, const RunConfig& c) {
         const FunctionModel f = FunctionModel::singular_inner(b.measure, c.alpha.value_or(0.05));
         return with_tolerance(brown_shields_table(f, c.p.value_or(3.0), grid_or(c, kDilations)), c);
       }},
      {"poisson-martingale", "Poisson integral against the dyadic martingale on top-half boxes",
       [](const MeasureBundle& b, const RunConfig& c) {
         return with_tolerance(poisson_martingale_gap(b.measure, c.depth.value_or(12)), c);
       }},
      {"korenblum", "necessity theorem: Korenblum condition",
       [](const MeasureBundle& b, const RunConfig&) {
         CheckReport r = korenblum_necessity(b.measure, b.support ? *b.support : IntervalSet::points({}));
         if (!b.support) r.notes.push_back("no null carrier known for this measure; the empty set was tested");
         return r;
       }},
      {"annihilator", "annihilating functional for non-cyclic S_mu in l^p_A, p < 2",
       [](const MeasureBundle& b, const RunConfig& c) {
         const std::vector<int> ms{0, 1, 2};
         const std::vector<double> fallback{0.5, 0.6, 0.7, 0.8, 0.9};
         return with_tolerance(annihilator_check(b.measure, ms, 512, grid_or(c, fallback)), c);
       }},
      {"bloch-diff", "integral lemma: dilation differences of a Bloch function against a Besov function",
       [](const MeasureBundle& b, const RunConfig& c) {
         const FunctionModel fb = FunctionModel::log_singular_inner(b.measure);
         const FunctionModel phi = FunctionModel::singular_inner(b.measure, c.alpha.value_or(0.05));
         return with_tolerance(bloch_difference_bound(fb, phi, c.p.value_or(3.0), grid_or(c, kDilations)), c);
       }},
      {"fourier-decay", "polynomial Fourier decay of Salem measures",
       [](const MeasureBundle& b, const RunConfig& c) {
         return with_tolerance(
             fourier_decay_fit(b.measure, coefficient_count(c), salem_alpha(b, c), salem_epsilon(b, c)), c);
       }},
      {"fourier-lp", "l^p summability of Fourier coefficients",
       [](const MeasureBundle& b, const RunConfig& c) {
         return fourier_lp_summability(b.measure, c.p.value_or(4.0), coefficient_count(c), c.tolerance.value_or(0.02));
       }},
      {"integrability", "integrability hypothesis of the power theorem",
       [](const MeasureBundle& b, const RunConfig& c) {
         return integrability_check(profile_of(b), c.p.value_or(3.0), c.epsilon.value_or(0.05));
       }},
  };
  return checks;
}

const CheckEntry& find_check(const std::string& name) {
  for (const CheckEntry& e : check_registry())
    if (e.name == name) return e;
  std::string list;
  for (const auto& n : check_names()) list += (list.empty() ? "" : ", ") + n;
  throw ConfigError("unknown check '" + name + "'; available: " + list);
}

std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const auto& e : check_registry()) out.push_back(e.name);
  return out;
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& p : presets()) out.push_back(p.name);
  return out;
}

json default_spec(const std::string& topic) {
  if (topic == "salem" || topic == "theorem-necessity" || topic == "korenblum" || topic == "fourier-decay" ||
      topic == "fourier-lp")
    return {{"type", "salem"}, {"params", {{"alpha", 0.8}, {"epsilon", 0.05}}}, {"depth", 12}};
  return {{"type", "kahane"}, {"params", {{"C", 1.0}, {"gamma", 0.5}}}, {"depth", 16}};
}

int cmd_measure(const RunConfig& c) {
  if (c.spec.empty()) throw ConfigError("measure: --spec is required");
  const MeasureBundle b = build_measure(load_spec_text(c.spec), c.seed);
  write_measure_files(b, c, c.out);
  return 0;
}

int cmd_check(const RunConfig& c) {
  if (c.check.empty()) throw ConfigError("check: --check is required");
  const CheckEntry& entry = find_check(c.check);
  const MeasureBundle b = bundle_for(c, entry.name);
  const CheckReport r = entry.run(b, c);
  write_report(r, b, c.out);
  return r.verdict == Verdict::pass ? 0 : 1;
}

int cmd_suite(const RunConfig& c) {
  if (c.preset.empty()) throw ConfigError("suite: --preset is required");
  const Preset& preset = find_preset(c.preset);
  const MeasureBundle b = bundle_for(c, preset.name);
  json summary = {{"preset", preset.name},
                  {"result", preset.result},
                  {"seed", c.seed},
                  {"measure", b.spec},
                  {"reports", json::array()}};
  if (preset.with_measure) summary["measure_files"] = write_measure_files(b, c, c.out / "measure");
  bool all_pass = true;
  for (const std::string& name : preset.checks) {
    const CheckEntry& entry = find_check(name);
    const CheckReport r = entry.run(b, c);
    const auto files = write_report(r, b, c.out);
    all_pass = all_pass && r.verdict == Verdict::pass;
    summary["reports"].push_back({{"check", r.name},
                                  {"statement", r.statement},
                                  {"citation", entry.result},
                                  {"verdict", to_string(r.verdict)},
                                  {"statistic", r.worst_ratio},
                                  {"threshold", r.threshold},
                                  {"files", files}});
  }
  summary["verdict"] = all_pass ? "pass" : "fail";
  write_atomic(c.out / "summary.json", dump_json(summary));
  return all_pass ? 0 : 1;
}

}  // namespace cyclia::cli
