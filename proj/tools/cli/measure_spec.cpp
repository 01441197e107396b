#include "cli/measure_spec.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/cli.hpp"

namespace cyclia::cli {

namespace {

using nlohmann::json;

const json& require_object(const json& j, const std::string& field) {
  if (!j.is_object()) throw ConfigError("measure spec: field '" + field + "' must be an object");
  return j;
}

double number_field(const json& obj, const std::string& key, const std::string& path, std::optional<double> fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (fallback) return *fallback;
    throw ConfigError("measure spec: missing field '" + path + key + "'");
  }
  if (!it->is_number()) throw ConfigError("measure spec: field '" + path + key + "' must be a number");
  return it->get<double>();
}

std::int64_t integer_field(const json& obj, const std::string& key, const std::string& path,
                           std::optional<std::int64_t> fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (fallback) return *fallback;
    throw ConfigError("measure spec: missing field '" + path + key + "'");
  }
  if (!it->is_number_integer()) throw ConfigError("measure spec: field '" + path + key + "' must be an integer");
  return it->get<std::int64_t>();
}

bool bool_field(const json& obj, const std::string& key, const std::string& path, bool fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_boolean()) throw ConfigError("measure spec: field '" + path + key + "' must be a boolean");
  return it->get<bool>();
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) throw ConfigError("measure spec: unknown field '" + path + it.key() + "'");
  }
}

// Builds a measure and rethrows library argument errors as field-named configuration errors.
template <class F>
auto guarded(const std::string& field, F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("measure spec: invalid '" + field + "': " + e.what());
  }
}

}  // namespace

json load_spec_text(const std::string& path_or_json) {
  std::string text = path_or_json;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ConfigError("--spec: empty value");
  if (text[first] != '{') {
    std::ifstream in(path_or_json);
    if (!in) throw ConfigError("--spec: cannot read file '" + path_or_json + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("--spec: malformed JSON: ") + e.what());
  }
}

MeasureBundle build_measure(const json& spec, std::uint64_t default_seed) {
  require_object(spec, "(root)");
  reject_unknown(spec, {"type", "params", "depth", "seed"}, "");
  auto t = spec.find("type");
  if (t == spec.end()) throw ConfigError("measure spec: missing field 'type'");
  if (!t->is_string()) throw ConfigError("measure spec: field 'type' must be a string");
  const std::string type = t->get<std::string>();
  const json params = spec.contains("params") ? spec.at("params") : json::object();
  require_object(params, "params");
  const auto seed_i = integer_field(spec, "seed", "", static_cast<std::int64_t>(default_seed));
  if (seed_i < 0) throw ConfigError("measure spec: field 'seed' must be nonnegative");
  const auto seed = static_cast<std::uint64_t>(seed_i);

  MeasureBundle b;
  b.type = type;
  if (type == "lebesgue") {
    reject_unknown(params, {"mass"}, "params.");
    const double mass = number_field(params, "mass", "params.", 1.0);
    b.measure = guarded("params.mass", [&] { return CircleMeasure::lebesgue(mass); });
    b.spec = {{"type", type}, {"params", {{"mass", mass}}}};
  } else if (type == "atomic") {
    reject_unknown(params, {"atoms"}, "params.");
    auto it = params.find("atoms");
    if (it == params.end()) throw ConfigError("measure spec: missing field 'params.atoms'");
    if (!it->is_array() || it->empty()) throw ConfigError("measure spec: field 'params.atoms' must be a nonempty array");
    std::vector<Atom> atoms;
    json norm = json::array();
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string path = "params.atoms[" + std::to_string(k) + "].";
      const json& a = require_object((*it)[k], path);
      reject_unknown(a, {"x", "mass"}, path);
      const double x = number_field(a, "x", path, std::nullopt);
      const double m = number_field(a, "mass", path, 1.0);
      atoms.push_back({x, m});
      norm.push_back({{"x", x}, {"mass", m}});
    }
    b.measure = guarded("params.atoms", [&] { return CircleMeasure::atomic(atoms); });
    std::vector<double> xs;
    for (const Atom& a : b.measure.atoms()) xs.push_back(a.x);
    b.support = IntervalSet::points(xs);
    b.spec = {{"type", type}, {"params", {{"atoms", norm}}}};
  } else if (type == "kahane") {
    reject_unknown(params, {"C", "gamma", "beta0", "beta", "family"}, "params.");
    std::string family = "log_power";
    if (params.contains("family")) {
      if (!params["family"].is_string()) throw ConfigError("measure spec: field 'params.family' must be a string");
      family = params["family"].get<std::string>();
    }
    const double c = number_field(params, "C", "params.", 1.0);
    const auto depth = integer_field(spec, "depth", "", 16);
    if (family == "log_power") {
      if (params.contains("beta")) throw ConfigError("measure spec: unknown field 'params.beta' for family log_power");
      const double gamma = number_field(params, "gamma", "params.", 0.5);
      b.phi = guarded("params", [&] {
        return params.contains("beta0")
                   ? SmoothnessProfile::log_power(c, gamma, number_field(params, "beta0", "params.", std::nullopt))
                   : SmoothnessProfile::log_power(c, gamma);
      });
      b.spec = {{"type", type}, {"params", {{"family", family}, {"C", c}, {"gamma", gamma}, {"beta0", b.phi->beta0()}}}};
    } else if (family == "power_law") {
      if (params.contains("gamma")) throw ConfigError("measure spec: unknown field 'params.gamma' for family power_law");
      const double beta = number_field(params, "beta", "params.", 0.5);
      b.phi = guarded("params.beta", [&] { return SmoothnessProfile::power_law(c, beta); });
      b.spec = {{"type", type}, {"params", {{"family", family}, {"C", c}, {"beta", beta}}}};
    } else {
      throw ConfigError("measure spec: field 'params.family' must be log_power or power_law");
    }
    b.measure = guarded("depth", [&] { return kahane_smooth(*b.phi, static_cast<int>(depth), seed); });
    b.spec["depth"] = depth;
    b.spec["seed"] = seed;
  } else if (type == "salem") {
    reject_unknown(params, {"alpha", "epsilon", "d", "xi", "jitter"}, "params.");
    SalemSpec s;
    s.alpha = number_field(params, "alpha", "params.", 0.8);
    s.epsilon = number_field(params, "epsilon", "params.", 0.05);
    s.d = static_cast<int>(integer_field(params, "d", "params.", 2));
    s.xi = number_field(params, "xi", "params.", 0.0);
    s.jitter = bool_field(params, "jitter", "params.", true);
    s.generations = static_cast<int>(integer_field(spec, "depth", "", 12));
    s.seed = seed;
    b.salem = guarded("params", [&] { return salem_measure(s); });
    b.measure = b.salem->measure;
    b.support = b.salem->support;
    b.spec = {{"type", type},
              {"params",
               {{"alpha", s.alpha}, {"epsilon", s.epsilon}, {"d", b.salem->spec.d}, {"xi", b.salem->spec.xi},
                {"jitter", s.jitter}}},
              {"depth", s.generations},
              {"seed", seed}};
  } else {
    throw ConfigError("measure spec: field 'type' must be one of lebesgue, atomic, kahane, salem (got '" + type +
                      "')");
  }
  return b;
}

}  // namespace cyclia::cli
