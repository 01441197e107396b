#include "cyclia/check_report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace cyclia {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

void CheckReport::decide() {
  if (rows.empty()) throw std::logic_error("check report " + name + " has no rows");
  verdict = (worst_ratio <= threshold) ? Verdict::pass : Verdict::fail;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

nlohmann::json number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

nlohmann::json named(const NamedValues& values) {
  nlohmann::json o = nlohmann::json::object();
  for (const auto& [k, v] : values) o[k] = number(v);
  return o;
}

}  // namespace

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["statement"] = r.statement;
  j["params"] = r.params;
  j["columns"] = {{"lhs", r.lhs_label}, {"rhs", r.rhs_label}, {"ratio", r.ratio_label}};
  nlohmann::json rows = nlohmann::json::array();
  for (const CheckRow& row : r.rows) {
    rows.push_back({{"inputs", named(row.inputs)},
                    {"lhs", number(row.lhs)},
                    {"rhs", number(row.rhs)},
                    {"ratio", number(row.ratio)},
                    {"extra", named(row.extra)}});
  }
  j["rows"] = rows;
  j["statistic"] = {{"name", r.statistic}, {"value", number(r.worst_ratio)}, {"threshold", number(r.threshold)}};
  j["fits"] = named(r.fits);
  j["verdict"] = to_string(r.verdict);
  j["notes"] = r.notes;
  return j;
}

std::string to_csv(const CheckReport& r) {
  std::ostringstream os;
  if (r.rows.empty()) return os.str();
  const CheckRow& first = r.rows.front();
  for (const auto& [k, v] : first.inputs) os << k << ',';
  os << r.lhs_label << ',' << r.rhs_label << ',' << r.ratio_label;
  for (const auto& [k, v] : first.extra) os << ',' << k;
  os << '\n';
  for (const CheckRow& row : r.rows) {
    if (row.inputs.size() != first.inputs.size() || row.extra.size() != first.extra.size())
      throw std::logic_error("check report " + r.name + " has ragged rows");
    for (const auto& [k, v] : row.inputs) os << format_double(v) << ',';
    os << format_double(row.lhs) << ',' << format_double(row.rhs) << ',' << format_double(row.ratio);
    for (const auto& [k, v] : row.extra) os << ',' << format_double(v);
    os << '\n';
  }
  return os.str();
}

}  // namespace cyclia
