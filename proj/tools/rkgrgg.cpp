// Command-line front end. Builds one JSON run configuration from an optional
// --config file plus flags (flags win) and hands it to the C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rkgrgg/rkgrgg.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitSelftest = 3;

int exit_code(rkg_status s) {
  switch (s) {
    case RKG_OK:
      return kExitOk;
    case RKG_ERR_INVALID_ARGUMENT:
    case RKG_ERR_DOMAIN:
    case RKG_ERR_NULL:
      return kExitValidation;
    case RKG_ERR_SELFTEST:
      return kExitSelftest;
    default:
      return kExitRuntime;
  }
}

// Flag values land in one of these objects and are merged over the config
// file once parsing is done.
struct Overrides {
  json top = json::object();
  json section = json::object();
  json grid = json::object();
  json params = json::object();
};

template <class T>
CLI::Option* bind_flag(CLI::App* app, const std::string& flag, json& target,
                  const std::string& key, const std::string& help) {
  return app->add_option_function<T>(
      flag, [&target, key](const T& v) { target[key] = v; }, help);
}

CLI::Option* bind_list(CLI::App* app, const std::string& flag, json& target,
                       const std::string& key, const std::string& help) {
  return bind_flag<std::vector<double>>(app, flag, target, key, help)->delimiter(',');
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random key graph / random geometric graph connectivity toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  bool dry_run = false;
  Overrides ov;
  app.add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_flag("--dry-run", dry_run, "Validate and echo the configuration, then exit");
  bind_flag<std::uint64_t>(&app, "--seed", ov.top, "seed", "Master seed");
  bind_flag<std::uint64_t>(&app, "--workers", ov.top, "workers", "Worker threads (default $RKGRGG_WORKERS or 1)");
  bind_flag<std::string>(&app, "--format", ov.top, "format", "Output format (text, csv, json, edges)");
  bind_flag<std::string>(&app, "--output", ov.top, "output", "Output file (default stdout)");

  auto* gen = app.add_subcommand("generate", "Sample one instance; write an edge list or JSON");
  bind_flag<std::uint64_t>(gen, "--n", ov.section, "n", "Number of nodes");
  bind_flag<std::uint64_t>(gen, "--pool", ov.section, "pool", "Key pool size P");
  bind_flag<std::uint64_t>(gen, "--ring", ov.section, "ring", "Key ring size K");
  bind_flag<double>(gen, "--radius", ov.section, "radius", "Communication radius r");
  bind_flag<std::string>(gen, "--boundary", ov.section, "boundary", "square or torus");
  bind_flag<std::string>(gen, "--rule", ov.section, "rule", "intersection, geometric_only or key_only");

  auto* ana = app.add_subcommand("analyze", "Connectivity report for an instance file");
  bind_flag<std::string>(ana, "input,--input", ov.section, "input", "Instance JSON or edge list");
  ana->add_flag_function("--cells", [&](std::int64_t) { ov.section["cells"] = true; },
                         "Also evaluate the dual tessellations (JSON instances only)");
  bind_flag<double>(ana, "--delta", ov.section, "delta", "Denseness tolerance");
  bind_flag<double>(ana, "--theta", ov.section, "theta", "Cell side squared over r squared");

  auto* swp = app.add_subcommand("sweep", "Monte Carlo sweep over a regime grid");
  bind_flag<std::uint64_t>(swp, "--trials", ov.section, "trials", "Trials per grid point");
  bind_flag<double>(swp, "--epsilon", ov.section, "epsilon", "Epsilon in the finite-n disconnect bound");
  swp->add_flag_function("--no-cells", [&](std::int64_t) { ov.section["cells"] = false; },
                         "Skip the tessellation events");
  bind_flag<std::vector<std::uint64_t>>(swp, "--n", ov.grid, "n", "Node counts")->delimiter(',');
  bind_flag<std::string>(swp, "--regime", ov.grid, "regime", "critical, supercritical, rgg_only, rkg_only");
  bind_list(swp, "--value,--c1", ov.grid, "value", "c1, margin or c_n values");
  bind_flag<std::vector<std::string>>(swp, "--boundary", ov.grid, "boundary", "square and/or torus")
      ->delimiter(',');
  swp->add_option_function<double>(
      "--density-power", [&](double p) { ov.grid["density"] = {{"log_power", p}}; },
      "d_n = (log n)^p");
  swp->add_option_function<double>(
      "--density", [&](double d) { ov.grid["density"] = {{"absolute", d}}; }, "Absolute d_n");
  swp->add_flag_function("--loglog", [&](std::int64_t) { ov.grid["loglog"] = true; },
                         "Scale value by log log n");
  bind_flag<double>(swp, "--sigma", ov.grid, "sigma", "Pool size factor sigma");
  bind_flag<double>(swp, "--delta", ov.grid, "delta", "Denseness tolerance delta");
  bind_flag<double>(swp, "--theta", ov.grid, "theta", "Cell side squared over r squared");
  bind_flag<std::uint64_t>(swp, "--ring", ov.grid, "ring", "Force the ring size K");
  bind_flag<std::uint64_t>(swp, "--k-max", ov.grid, "k_max", "Largest ring size searched");
  bind_flag<double>(swp, "--tolerance", ov.grid, "tolerance", "Accepted relative error on beta");

  auto* bnd = app.add_subcommand("bounds", "Evaluate a closed-form bound over a parameter grid");
  bind_flag<std::string>(bnd, "--eval", ov.section, "eval", "Evaluator name");
  for (const char* name : {"c1", "n", "epsilon", "area", "beta", "pool", "ring", "s", "delta",
                           "l", "x", "alpha"}) {
    bind_list(bnd, std::string("--") + name, ov.params, name, std::string("Values of ") + name);
  }
  bind_list(bnd, "--d-over-r", ov.params, "d_over_r", "Separation d/r");
  bind_list(bnd, "--cell-nodes", ov.params, "cell_nodes", "Nodes in the cell (N)");

  auto* con = app.add_subcommand("check-constants", "Check the sufficiency constants");
  for (const char* name : {"sigma", "lambda", "mu", "delta", "epsilon", "alpha"}) {
    bind_flag<double>(con, std::string("--") + name, ov.section, name, name);
  }
  bind_flag<std::uint64_t>(con, "--R", ov.section, "R", "R");
  bind_flag<std::uint64_t>(con, "--pool", ov.section, "pool", "Key pool size P");
  bind_flag<std::uint64_t>(con, "--ring", ov.section, "ring", "Key ring size K");
  bind_flag<std::uint64_t>(con, "--cell-nodes", ov.section, "cell_nodes", "Nodes per cell");

  auto* st = app.add_subcommand("selftest", "Run the oracle and sandwich property suites");
  bind_flag<std::uint64_t>(st, "--instances", ov.section, "instances", "Random graph instances");
  bind_flag<std::uint64_t>(st, "--draws", ov.section, "draws", "Random parameter draws");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  std::string section_key = command == "check-constants" ? "check_constants" : command;

  json doc = json::object();
  try {
    if (!config_path.empty()) doc = json::parse(read_file(config_path));
  } catch (const std::exception& e) {
    std::cerr << "error: config: " << e.what() << '\n';
    return kExitValidation;
  }
  if (!doc.is_object()) {
    std::cerr << "error: config must be a JSON object\n";
    return kExitValidation;
  }
  doc["command"] = command;
  if (!doc.contains("workers") && !ov.top.contains("workers")) {
    if (const char* env = std::getenv("RKGRGG_WORKERS"); env && *env) {
      try {
        std::size_t used = 0;
        const long long w = std::stoll(env, &used);
        if (used != std::string(env).size() || w < 1) throw std::invalid_argument(env);
        doc["workers"] = w;
      } catch (const std::exception&) {
        std::cerr << "error: RKGRGG_WORKERS must be a positive integer\n";
        return kExitValidation;
      }
    }
  }
  doc.update(ov.top);
  if (!ov.section.empty() || !ov.grid.empty() || !ov.params.empty()) {
    json& section = doc[section_key];
    if (section.is_null()) section = json::object();
    if (section.is_object()) {
      section.update(ov.section);
      if (!ov.grid.empty()) {
        json& grid = section["grid"];
        if (grid.is_null()) grid = json::object();
        if (grid.is_object()) grid.update(ov.grid);
      }
      if (!ov.params.empty()) {
        json& params = section["params"];
        if (params.is_null()) params = json::object();
        if (params.is_object()) params.update(ov.params);
      }
    }
  }

  rkg_config* cfg = nullptr;
  rkg_status status = rkg_config_parse(doc.dump().c_str(), &cfg);
  if (status != RKG_OK) {
    std::cerr << "error: " << rkg_last_error() << '\n';
    return exit_code(status);
  }

  rkg_string* out = nullptr;
  if (dry_run) {
    status = rkg_config_echo(cfg, &out);
  } else {
    status = rkg_run(cfg, &out);
  }
  int code = exit_code(status);
  if (status != RKG_OK) std::cerr << "error: " << rkg_last_error() << '\n';

  if (out) {
    rkg_string* path = nullptr;
    rkg_config_output_path(cfg, &path);
    const std::string target = dry_run ? "" : rkg_string_data(path);
    rkg_string_free(path);
    if (target.empty()) {
      std::fwrite(rkg_string_data(out), 1, rkg_string_size(out), stdout);
      std::fflush(stdout);
    } else {
      std::ofstream file(target, std::ios::binary);
      file.write(rkg_string_data(out), static_cast<std::streamsize>(rkg_string_size(out)));
      if (!file) {
        std::cerr << "error: cannot write " << target << '\n';
        code = kExitRuntime;
      }
    }
    rkg_string_free(out);
  }
  rkg_config_free(cfg);
  return code;
}
