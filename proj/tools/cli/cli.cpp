#include "cli/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>

#include "cli/commands.hpp"

namespace cyclia::cli {

std::vector<double> GridSpec::values() const {
  if (count < 1) throw ConfigError("--grid-count must be at least 1");
  std::vector<double> u(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) u[static_cast<std::size_t>(k)] = count == 1 ? start : start + (stop - start) * k / (count - 1);
  if (scale == "linear") return u;
  if (scale == "log1m") {
    for (double& v : u) v = 1.0 - std::pow(10.0, -v);
    return u;
  }
  if (scale == "dyadic") {
    for (double& v : u) v = 1.0 - std::exp2(-v);
    return u;
  }
  throw ConfigError("--grid-scale must be linear, log1m or dyadic");
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv) {
  CLI::App app{"Numerical experiments on singular inner functions and their cyclicity"};
  RunConfig c;
  double p = 0, alpha = 0, epsilon = 0, tolerance = 0;
  int depth = 0;
  GridSpec grid;
  std::string out = c.out.string();
  app.add_option("command", c.command, "measure | check | suite")->required();
  auto* spec = app.add_option("--spec", c.spec, "measure spec: file path or inline JSON");
  app.add_option("--check", c.check, "check name");
  app.add_option("--preset", c.preset, "suite preset");
  auto* p_opt = app.add_option("--p", p, "exponent p");
  auto* a_opt = app.add_option("--alpha", alpha, "exponent alpha");
  auto* e_opt = app.add_option("--epsilon", epsilon, "epsilon");
  auto* d_opt = app.add_option("--depth", depth, "depth or generation count");
  app.add_option("--seed", c.seed, "random seed");
  app.add_option("--out", out, "output directory");
  auto* gs = app.add_option("--grid-start", grid.start, "grid start");
  auto* ge = app.add_option("--grid-stop", grid.stop, "grid stop");
  auto* gc = app.add_option("--grid-count", grid.count, "grid point count");
  auto* gk = app.add_option("--grid-scale", grid.scale, "linear | log1m | dyadic");
  auto* t_opt = app.add_option("--tolerance", tolerance, "threshold override");
  (void)spec;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
  c.out = out;
  if (*p_opt) {
    if (!(p > 0.0)) throw ConfigError("--p must be positive");
    c.p = p;
  }
  if (*a_opt) c.alpha = alpha;
  if (*e_opt) c.epsilon = epsilon;
  if (*d_opt) c.depth = depth;
  if (*t_opt) c.tolerance = tolerance;
  const bool any_grid = *gs || *ge || *gc || *gk;
  if (any_grid) {
    if (!*gs || !*gc) throw ConfigError("grid override needs at least --grid-start and --grid-count");
    if (!*ge) grid.stop = grid.start;
    grid.values();
    c.grid = grid;
  }
  if (c.command != "measure" && c.command != "check" && c.command != "suite")
    throw ConfigError("unknown command '" + c.command + "'; available: measure, check, suite");
  return c;
}

int run(const RunConfig& c) {
  if (c.command == "measure") return cmd_measure(c);
  if (c.command == "check") return cmd_check(c);
  return cmd_suite(c);
}

int main_entry(int argc, const char* const* argv) {
  try {
    const auto config = parse_args(argc, argv);
    if (!config) return 0;
    return run(*config);
  } catch (const ConfigError& e) {
    std::cerr << "cyclia: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "cyclia: error: " << e.what() << '\n';
    return 2;
  }
}

void write_atomic(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << text;
    if (!f) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace cyclia::cli
