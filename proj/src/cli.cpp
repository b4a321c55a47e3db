#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "mostow/experiments.hpp"

namespace mostow {

namespace {

using Json = nlohmann::json;

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    out.push_back(std::stod(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
  CLI::App app{"numerical verifiers for hyperbolic rigidity lemmas"};
  app.require_subcommand(1);

  CLI::App* list_cmd = app.add_subcommand("list", "list experiment ids");

  CLI::App* run_cmd = app.add_subcommand("run", "run one experiment");
  std::string id, config_file, out_dir, paths, r_text, k_text, eps_text;
  std::uint64_t seed = 0;
  long long count = -1, resolution = -1;
  double y = -1, spacing = -1;
  bool plot = false;
  bool seed_given = false, out_given = false;
  run_cmd->add_option("id", id, "experiment id (see `list`)")->required();
  run_cmd->add_option("--config", config_file, "JSON config file; flags override");
  run_cmd->add_option("--seed", seed, "RNG seed")->each([&](const std::string&) { seed_given = true; });
  run_cmd->add_option("--out", out_dir, "output directory")->each([&](const std::string&) { out_given = true; });
  run_cmd->add_option("--count", count, "number of random cases");
  run_cmd->add_option("--r", r_text, "tube radii, comma separated");
  run_cmd->add_option("--K", k_text, "bi-Lipschitz constants, comma separated");
  run_cmd->add_option("--eps", eps_text, "target epsilons, comma separated");
  run_cmd->add_option("--paths", paths, "tube path family (builtin:radial|arc|mixed)");
  run_cmd->add_option("--y", y, "line height for stiff-line");
  run_cmd->add_option("--spacing", spacing, "sample spacing (morse) or grid spacing (scan)");
  run_cmd->add_option("--resolution", resolution, "boundary samples (disk-ratio)");
  run_cmd->add_flag("--plot", plot, "also write SVG plots");

  std::vector<std::string> argv_s = {"mostow"};
  argv_s.insert(argv_s.end(), args.begin(), args.end());
  std::vector<char*> argv;
  argv.reserve(argv_s.size());
  for (std::string& s : argv_s) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (list_cmd->parsed()) {
    for (const ExperimentInfo& info : list_experiments()) {
      std::printf("%-14s %s\n", info.id.c_str(), info.anchor.c_str());
    }
    return 0;
  }

  ExperimentConfig cfg;
  cfg.id = id;
  if (const char* env_out = std::getenv("MOSTOW_OUT")) cfg.out_dir = env_out;
  try {
    if (!config_file.empty()) {
      std::ifstream in(config_file);
      if (!in) throw ConfigError("cannot read config file '" + config_file + "'");
      Json j;
      try {
        in >> j;
      } catch (const std::exception& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
      }
      if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
      if (j.contains("out_dir")) cfg.out_dir = j.at("out_dir").get<std::string>();
      if (j.contains("params")) cfg.params = j.at("params");
      if (j.contains("experiment") && j.at("experiment").get<std::string>() != id)
        throw ConfigError("config: file is for experiment '" +
                          j.at("experiment").get<std::string>() + "', not '" + id + "'");
    }
    if (seed_given) cfg.seed = seed;
    if (out_given) cfg.out_dir = out_dir;
    cfg.plot = plot || cfg.params.value("plot", false);
    if (count >= 0) cfg.params["count"] = count;
    if (resolution >= 0) cfg.params["resolution"] = resolution;
    if (y >= 0) cfg.params["y"] = y;
    if (spacing > 0) cfg.params["spacing"] = spacing;
    if (!paths.empty()) cfg.params["paths"] = paths;
    if (!r_text.empty()) cfg.params["r"] = parse_list(r_text);
    if (!k_text.empty()) cfg.params["K"] = parse_list(k_text);
    if (!eps_text.empty()) cfg.params["eps"] = parse_list(eps_text);

    RunReport rep = run_experiment(cfg);
    write_reports(rep, cfg);
    std::printf("%s: %s (%zu rows, %.2f s) -> %s\n", rep.id.c_str(),
                rep.pass ? "PASS" : "FAIL", rep.rows.size(), rep.wall_seconds,
                cfg.out_dir.c_str());
    return rep.pass ? 0 : 1;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

}  // namespace mostow
