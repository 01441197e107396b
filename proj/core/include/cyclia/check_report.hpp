#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <utility>
#include <vector>

namespace cyclia {

enum class Verdict { pass, fail, inconclusive };
std::string to_string(Verdict v);

using NamedValues = std::vector<std::pair<std::string, double>>;

struct CheckRow {
  NamedValues inputs;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  NamedValues extra;
};

struct CheckReport {
  std::string name;
  std::string statement;  // the inequality or property being probed
  nlohmann::json params = nlohmann::json::object();
  std::string lhs_label = "lhs";
  std::string rhs_label = "rhs";
  std::string ratio_label = "ratio";
  std::vector<CheckRow> rows;
  std::string statistic;  // what worst_ratio measures
  double worst_ratio = 0.0;
  double threshold = 0.0;
  NamedValues fits;
  Verdict verdict = Verdict::inconclusive;
  std::vector<std::string> notes;
  double runtime_seconds = 0.0;  // in-memory only; excluded from serialized output

  // pass iff worst_ratio <= threshold.
  void decide();
};

nlohmann::json to_json(const CheckReport& report);
std::string to_csv(const CheckReport& report);
// printf("%.17g") for finite values, "nan"/"inf"/"-inf" otherwise.
std::string format_double(double v);

}  // namespace cyclia
