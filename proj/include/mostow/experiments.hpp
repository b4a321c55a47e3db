#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace mostow {

struct ExperimentConfig {
  std::string id;
  std::uint64_t seed = 0;
  std::string out_dir = "reports";
  bool plot = false;
  nlohmann::json params = nlohmann::json::object();  // experiment-specific knobs
};

// thrown for unknown ids, malformed configs, unwritable outputs (exit code 2)
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunReport {
  std::string id;
  bool pass = false;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;  // already formatted
  double wall_seconds = 0;  // reported on stdout only, never in artifacts
  std::string tool_version;
  std::string config_digest;
};

RunReport run_experiment(const ExperimentConfig& config);

// writes <out>/<id>.csv and <id>.json (and optional SVG plots); byte-identical
// for identical config and seed
void write_reports(const RunReport& report, const ExperimentConfig& config);

struct ExperimentInfo {
  std::string id;
  std::string anchor;  // the lemma the job exercises
};
const std::vector<ExperimentInfo>& list_experiments();

// full command-line entry point (0 all-pass, 1 any-fail, 2 usage/config error)
int cli_main(const std::vector<std::string>& args);

std::string format_double(double v);  // %.17g, shared by reports and tests

}  // namespace mostow
