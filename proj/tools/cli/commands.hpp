#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cli/cli.hpp"
#include "cli/measure_spec.hpp"
#include "cyclia/check_report.hpp"

namespace cyclia::cli {

struct CheckEntry {
  std::string name;
  std::string result;  // the theorem or lemma the check mirrors
  std::function<CheckReport(const MeasureBundle&, const RunConfig&)> run;
};

const std::vector<CheckEntry>& check_registry();
const CheckEntry& find_check(const std::string& name);

// Default measure when no --spec is given.
nlohmann::json default_spec(const std::string& preset_or_check);

int cmd_measure(const RunConfig& config);
int cmd_check(const RunConfig& config);
int cmd_suite(const RunConfig& config);

}  // namespace cyclia::cli
