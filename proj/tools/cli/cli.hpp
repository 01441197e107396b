#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace cyclia::cli {

// Malformed command line or measure spec; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  int count = 0;
  std::string scale = "linear";  // linear | log1m (1 - 10^-u) | dyadic (1 - 2^-u)

  std::vector<double> values() const;
};

struct RunConfig {
  std::string command;  // measure | check | suite
  std::string spec;     // path or inline JSON
  std::string check;
  std::string preset;
  std::optional<double> p;
  std::optional<double> alpha;
  std::optional<double> epsilon;
  std::optional<int> depth;
  std::uint64_t seed = 0;
  std::filesystem::path out = "cyclia_out";
  std::optional<GridSpec> grid;
  std::optional<double> tolerance;
};

// Parses argv; throws ConfigError on usage errors. Returns nullopt when help was printed.
std::optional<RunConfig> parse_args(int argc, const char* const* argv);

// Runs a parsed configuration and returns the process exit code (0 pass, 1 fail, 2 usage error).
int run(const RunConfig& config);

// parse_args + run with error reporting on stderr.
int main_entry(int argc, const char* const* argv);

std::vector<std::string> check_names();
std::vector<std::string> preset_names();

// Writes `text` to `path` through a temporary file and a rename.
void write_atomic(const std::filesystem::path& path, const std::string& text);

}  // namespace cyclia::cli
