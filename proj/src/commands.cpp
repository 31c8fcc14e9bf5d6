#include "rkgrgg/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json_fields.hpp"
#include "rkgrgg/combinatorics.hpp"
#include "rkgrgg/connectivity.hpp"
#include "rkgrgg/error.hpp"
#include "rkgrgg/format.hpp"
#include "rkgrgg/graph_io.hpp"
#include "rkgrgg/selftest.hpp"
#include "rkgrgg/tessellation.hpp"

namespace rkgrgg {

namespace {

using detail::FieldReader;
using nlohmann::json;

// --- bounds evaluators ------------------------------------------------------

using Args = std::map<std::string, double>;

struct Evaluator {
  std::string name;
  std::vector<std::string> params;
  std::vector<std::string> outputs;
  std::function<std::vector<double>(const Args&)> fn;
};

std::uint64_t whole(const Args& a, const std::string& key) {
  const double v = a.at(key);
  if (!(v >= 0.0) || v != std::floor(v) || v > 9.007199254740992e15) {
    throw ValidationError(key + " must be a nonnegative integer");
  }
  return static_cast<std::uint64_t>(v);
}

KeyPoolParams pool_of(const Args& a) { return {whole(a, "pool"), whole(a, "ring")}; }

const std::vector<Evaluator>& evaluators() {
  static const std::vector<Evaluator> table = {
      {"disconnect_floor", {"c1"}, {"floor", "log_floor"},
       [](const Args& a) {
         const auto b = disconnect_lower_bound(a.at("c1"), 2, 1.0);
         return std::vector<double>{b.floor, b.log_floor};
       }},
      {"disconnect_finite", {"c1", "n", "epsilon"}, {"floor", "finite_n", "regime_ok"},
       [](const Args& a) {
         const auto b = disconnect_lower_bound(a.at("c1"), whole(a, "n"), a.at("epsilon"));
         return std::vector<double>{b.floor, b.finite_n, b.regime_ok ? 1.0 : 0.0};
       }},
      {"single_isolation", {"n", "area", "beta"}, {"value", "lower", "upper"},
       [](const Args& a) {
         const auto p = single_isolation_probability(whole(a, "n"), a.at("area"), a.at("beta"));
         return std::vector<double>{p.value, p.sandwich.lower, p.sandwich.upper};
       }},
      {"isolation_count_lower", {"n", "c1"}, {"value", "regime_ok"},
       [](const Args& a) {
         const auto b = isolation_count_lower_bound(whole(a, "n"), a.at("c1"));
         return std::vector<double>{b.value, b.regime_ok ? 1.0 : 0.0};
       }},
      {"joint_isolation", {"n", "area", "pool", "ring", "d_over_r"}, {"value", "log_value", "gamma"},
       [](const Args& a) {
         const auto lp = link_probabilities(pool_of(a));
         const auto kind = classify_separation(a.at("d_over_r"), 1.0);
         const auto b = joint_isolation_bound(whole(a, "n"), a.at("area"), lp.beta,
                                              lp.beta_tilde, kind);
         return std::vector<double>{b.value, b.log_value, b.gamma};
       }},
      {"denseness", {"n", "s", "delta"}, {"per_cell", "union_bound"},
       [](const Args& a) {
         const auto b = denseness_bound(a.at("n"), a.at("s"), a.at("delta"));
         return std::vector<double>{b.per_cell, b.union_bound};
       }},
      {"component", {"cell_nodes", "l", "x", "pool", "ring"}, {"value", "log_value"},
       [](const Args& a) {
         const auto pool = pool_of(a);
         const auto b = component_bound(whole(a, "cell_nodes"), whole(a, "l"), whole(a, "x"),
                                        pool, link_probability(pool).beta);
         return std::vector<double>{b.value, b.log_value};
       }},
      {"cell_isolation", {"alpha", "delta", "n"}, {"value", "regime_ok"},
       [](const Args& a) {
         const auto b = cell_isolation_bound(a.at("alpha"), a.at("delta"), whole(a, "n"));
         return std::vector<double>{b.value, b.regime_ok ? 1.0 : 0.0};
       }},
      {"link_probability", {"pool", "ring"}, {"beta", "beta_tilde", "gap"},
       [](const Args& a) {
         const auto pool = pool_of(a);
         const double beta = link_probability(pool).beta;
         if (pool.pool_size < 3 * pool.ring_size) {
           const double nan = std::numeric_limits<double>::quiet_NaN();
           return std::vector<double>{beta, nan, nan};
         }
         const auto lp = link_probabilities(pool);
         return std::vector<double>{lp.beta, lp.beta_tilde, beta_ratio_gap(pool)};
       }},
      {"exp_sandwich", {"x", "n"}, {"lower", "value", "upper"},
       [](const Args& a) {
         const auto s = exp_sandwich(a.at("x"), whole(a, "n"));
         return std::vector<double>{s.lower, s.value, s.upper};
       }},
      {"binomial_sandwich", {"pool", "ring"},
       {"single_lower", "single_value", "single_upper", "dual_lower", "dual_value", "dual_upper"},
       [](const Args& a) {
         const auto pool = pool_of(a);
         const auto s = binomial_ratio_sandwich(pool, RatioMode::single);
         const auto d = binomial_ratio_sandwich(pool, RatioMode::dual);
         return std::vector<double>{s.lower, s.value, s.upper, d.lower, d.value, d.upper};
       }},
      {"gamma_eps", {"epsilon"}, {"gamma"},
       [](const Args& a) { return std::vector<double>{gamma_of_epsilon(a.at("epsilon"))}; }},
  };
  return table;
}

const Evaluator& find_evaluator(std::string_view name) {
  for (const auto& e : evaluators()) {
    if (e.name == name) return e;
  }
  std::string names;
  for (const auto& e : evaluators()) names += (names.empty() ? "" : ", ") + e.name;
  throw ValidationError("bounds.eval must be one of " + names);
}

// --- parsing ----------------------------------------------------------------

ModelParams parse_generate(const json& j) {
  FieldReader r(j, "generate");
  ModelParams p;
  if (!r.has("n")) throw ValidationError("generate.n is required");
  if (!r.has("radius")) throw ValidationError("generate.radius is required");
  p.n = r.count("n", 0);
  p.pool.pool_size = r.count("pool", 0);
  p.pool.ring_size = r.count("ring", 0);
  p.radius = r.number("radius", 0.0);
  const auto b = parse_boundary(r.text("boundary", "square"));
  if (!b) throw ValidationError("boundary must be square or torus");
  p.boundary = *b;
  const auto rule = parse_edge_rule(r.text("rule", "intersection"));
  if (!rule) throw ValidationError("rule must be geometric_only, key_only or intersection");
  p.rule = *rule;
  r.finish();
  validate(p);
  return p;
}

AnalyzeConfig parse_analyze(const json& j) {
  FieldReader r(j, "analyze");
  AnalyzeConfig a;
  a.input = r.text("input", "");
  if (a.input.empty()) throw ValidationError("analyze.input is required");
  a.cells = r.flag("cells", a.cells);
  a.delta = r.number("delta", a.delta);
  a.theta = r.number("theta", a.theta);
  r.finish();
  if (!(a.delta > 0.0 && a.delta < 1.0)) throw ValidationError("delta must lie in (0,1)");
  if (!(a.theta > 0.0 && a.theta <= 0.5)) throw ValidationError("theta must lie in (0,0.5]");
  return a;
}

std::vector<RegimeSpec> expand_grid(const json& grid) {
  FieldReader r(grid, "sweep.grid");
  const auto ns = r.counts("n", {1000});
  const auto values = r.numbers("value", {1.0});
  const auto boundaries = r.texts("boundary", {"square"});
  json base = json::object();
  for (const auto& [key, v] : grid.items()) {
    if (key != "n" && key != "value" && key != "boundary") base[key] = v;
  }
  std::vector<RegimeSpec> out;
  for (const auto n : ns) {
    for (const double v : values) {
      for (const auto& b : boundaries) {
        json point = base;
        point["n"] = n;
        point["value"] = v;
        point["boundary"] = b;
        out.push_back(regime_from_json(point));
      }
    }
  }
  return out;
}

SweepConfig parse_sweep(const json& j) {
  FieldReader r(j, "sweep");
  SweepConfig s;
  s.trials = r.count("trials", s.trials);
  if (s.trials < 1) throw ValidationError("trials must be >= 1");
  s.cells = r.flag("cells", s.cells);
  if (r.has("epsilon")) {
    s.epsilon = r.number("epsilon", 0.0);
    if (!(*s.epsilon > 0.0 && *s.epsilon < 1.0)) {
      throw ValidationError("epsilon must lie in (0,1)");
    }
  }
  const bool has_grid = r.has("grid");
  const bool has_points = r.has("points");
  if (has_grid == has_points) {
    throw ValidationError("sweep needs exactly one of grid, points");
  }
  if (has_grid) {
    s.points = expand_grid(r.raw("grid"));
  } else {
    const json& pts = r.raw("points");
    if (!pts.is_array() || pts.empty()) {
      throw ValidationError("sweep.points must be a nonempty array");
    }
    for (const auto& p : pts) s.points.push_back(regime_from_json(p));
  }
  r.finish();
  return s;
}

BoundsConfig parse_bounds(const json& j) {
  FieldReader r(j, "bounds");
  BoundsConfig b;
  b.eval = r.text("eval", "");
  if (b.eval.empty()) throw ValidationError("bounds.eval is required");
  const Evaluator& ev = find_evaluator(b.eval);
  const json empty = json::object();
  FieldReader p(r.has("params") ? r.raw("params") : empty, "bounds.params");
  for (const auto& name : ev.params) {
    if (!p.has(name)) {
      throw ValidationError("bounds.params." + name + " is required for " + ev.name);
    }
    auto values = p.numbers(name, {});
    for (double v : values) {
      if (!std::isfinite(v)) throw ValidationError(name + " must be finite");
    }
    b.params.emplace_back(name, std::move(values));
  }
  p.finish();
  r.finish();
  return b;
}

ConstantsConfig parse_constants(const json& j) {
  FieldReader r(j, "check_constants");
  ConstantsConfig c;
  auto& k = c.consts;
  k.sigma = r.number("sigma", k.sigma);
  k.lambda = r.number("lambda", k.lambda);
  k.mu = r.number("mu", k.mu);
  k.delta = r.number("delta", k.delta);
  k.R = r.count("R", k.R);
  k.epsilon = r.number("epsilon", k.epsilon);
  k.alpha = r.number("alpha", k.alpha);
  c.pool.pool_size = r.count("pool", c.pool.pool_size);
  c.pool.ring_size = r.count("ring", c.pool.ring_size);
  c.cell_nodes = r.optional_count("cell_nodes");
  r.finish();
  if (!(k.sigma > 0.0)) throw ValidationError("sigma must be > 0");
  if (!(k.lambda > 0.0 && k.lambda < 0.5)) throw ValidationError("lambda must lie in (0,0.5)");
  if (!(k.mu > 0.0 && k.mu < 0.44)) throw ValidationError("mu must lie in (0,0.44)");
  if (!(k.delta > 0.0 && k.delta < 1.0)) throw ValidationError("delta must lie in (0,1)");
  if (!(k.epsilon > 0.0 && k.epsilon < 1.0)) throw ValidationError("epsilon must lie in (0,1)");
  if (!std::isfinite(k.alpha)) throw ValidationError("alpha must be finite");
  if (c.pool.ring_size < 1) throw ValidationError("ring must be >= 1");
  if (c.pool.pool_size < c.pool.ring_size) throw ValidationError("pool must be >= ring");
  return c;
}

SelftestConfig parse_selftest(const json& j) {
  FieldReader r(j, "selftest");
  SelftestConfig s;
  s.instances = r.count("instances", s.instances);
  s.draws = r.count("draws", s.draws);
  r.finish();
  if (s.instances < 1) throw ValidationError("instances must be >= 1");
  if (s.draws < 1) throw ValidationError("draws must be >= 1");
  return s;
}

OutputFormat default_format(Command c) {
  switch (c) {
    case Command::generate:
      return OutputFormat::edges;
    case Command::analyze:
      return OutputFormat::json;
    case Command::sweep:
      return OutputFormat::csv;
    default:
      return OutputFormat::text;
  }
}

std::vector<OutputFormat> allowed_formats(Command c) {
  switch (c) {
    case Command::generate:
      return {OutputFormat::edges, OutputFormat::json};
    case Command::analyze:
      return {OutputFormat::json, OutputFormat::text};
    case Command::sweep:
      return {OutputFormat::csv, OutputFormat::json};
    case Command::bounds:
      return {OutputFormat::text, OutputFormat::json, OutputFormat::csv};
    default:
      return {OutputFormat::text, OutputFormat::json};
  }
}

std::optional<OutputFormat> parse_format(std::string_view s) {
  if (s == "text") return OutputFormat::text;
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  if (s == "edges") return OutputFormat::edges;
  return std::nullopt;
}

// --- execution --------------------------------------------------------------

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) out << "  ";
      out << std::string(width[c] - cells[c].size(), ' ') << cells[c];
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out.str();
}

std::string run_generate(const RunConfig& cfg) {
  const auto graph = generate_instance(cfg.generate, cfg.seed);
  if (cfg.format == OutputFormat::json) {
    return instance_to_json(graph, cfg.generate, cfg.seed).dump() + "\n";
  }
  std::ostringstream out;
  write_edge_list(graph, out);
  return out.str();
}

std::string run_analyze(const RunConfig& cfg) {
  std::ifstream in(cfg.analyze.input);
  if (!in) throw std::runtime_error("cannot open " + cfg.analyze.input);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string content = buf.str();
  const auto first = content.find_first_not_of(" \t\r\n");

  json doc;
  std::optional<DualConnectivity> cells;
  Graph topo;
  if (first != std::string::npos && content[first] == '{') {
    json parsed;
    try {
      parsed = json::parse(content);
    } catch (const json::parse_error& e) {
      throw ValidationError(std::string("instance JSON is malformed: ") + e.what());
    }
    LoadedInstance inst = instance_from_json(parsed);
    topo = inst.graph.topology();
    if (cfg.analyze.cells) {
      const auto specs = make_dual_tessellations(inst.params.radius, cfg.analyze.theta);
      cells = dual_tessellation_connectivity(inst.graph, specs, cfg.analyze.delta);
    }
  } else {
    if (cfg.analyze.cells) {
      throw ValidationError("analyze.cells requires a JSON instance (edge lists carry no positions)");
    }
    std::istringstream text(content);
    topo = read_edge_list(text);
  }

  const ConnectivityReport rep = analyze(topo);
  const auto hist = component_size_histogram(topo);
  if (cfg.format == OutputFormat::text) {
    std::ostringstream out;
    out << "nodes " << topo.node_count() << '\n'
        << "edges " << topo.edge_count() << '\n'
        << "component_count " << rep.component_count << '\n'
        << "largest_component " << rep.largest_component << '\n'
        << "isolated_nodes " << rep.isolated_nodes << '\n'
        << "min_degree " << rep.min_degree << '\n'
        << "is_connected " << (rep.is_connected ? "true" : "false") << '\n';
    if (cells) {
      out << "t1 " << (cells->t1 ? "true" : "false") << '\n'
          << "t2 " << (cells->t2 ? "true" : "false") << '\n'
          << "all_dense " << (cells->all_dense ? "true" : "false") << '\n';
    }
    return out.str();
  }
  doc["report"] = to_json(rep);
  json h = json::object();
  for (const auto& [size, count] : hist) h[std::to_string(size)] = count;
  doc["component_sizes"] = h;
  if (cells) {
    doc["cells"] = {{"t1", cells->t1},
                    {"t2", cells->t2},
                    {"all_dense", cells->all_dense},
                    {"implication_holds", cells->implication_holds()},
                    {"first", to_json(cells->first)},
                    {"second", to_json(cells->second)}};
  }
  return doc.dump(2) + "\n";
}

std::string run_sweep(const RunConfig& cfg) {
  SweepOptions opt;
  opt.trials = cfg.sweep.trials;
  opt.master_seed = cfg.seed;
  opt.workers = cfg.workers;
  opt.cells = cfg.sweep.cells;
  opt.epsilon = cfg.sweep.epsilon;
  const SweepResult res = sweep(cfg.sweep.points, opt);
  if (cfg.format == OutputFormat::json) return to_json(res).dump(2) + "\n";
  std::ostringstream out;
  write_sweep_csv(res, out);
  return out.str();
}

std::string run_bounds(const RunConfig& cfg) {
  const Evaluator& ev = find_evaluator(cfg.bounds.eval);
  std::vector<std::vector<double>> rows;
  std::vector<std::size_t> idx(cfg.bounds.params.size(), 0);
  for (;;) {
    Args args;
    std::vector<double> row;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const auto& [name, values] = cfg.bounds.params[i];
      args[name] = values[idx[i]];
      row.push_back(values[idx[i]]);
    }
    const auto outputs = ev.fn(args);
    row.insert(row.end(), outputs.begin(), outputs.end());
    rows.push_back(std::move(row));
    // Odometer increment, last parameter fastest.
    bool advanced = false;
    for (std::size_t i = idx.size(); i-- > 0;) {
      if (++idx[i] < cfg.bounds.params[i].second.size()) {
        advanced = true;
        break;
      }
      idx[i] = 0;
    }
    if (!advanced) break;
  }

  std::vector<std::string> header = ev.params;
  header.insert(header.end(), ev.outputs.begin(), ev.outputs.end());
  if (cfg.format == OutputFormat::json) {
    json out_rows = json::array();
    for (const auto& row : rows) {
      json r = json::object();
      for (std::size_t c = 0; c < header.size(); ++c) {
        r[header[c]] = std::isfinite(row[c]) ? json(row[c]) : json();
      }
      out_rows.push_back(r);
    }
    return json{{"eval", ev.name}, {"rows", out_rows}}.dump(2) + "\n";
  }
  if (cfg.format == OutputFormat::csv) {
    std::ostringstream out;
    for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        out << (c ? "," : "") << format_double(row[c]);
      }
      out << '\n';
    }
    return out.str();
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows) {
    std::vector<std::string> r;
    for (double v : row) r.push_back(format_general(v, 6));
    cells.push_back(std::move(r));
  }
  return render_table(header, cells);
}

std::string run_constants(const RunConfig& cfg) {
  const auto& c = cfg.check_constants;
  const ConstantsReport rep = sufficiency_constants_check(c.consts, c.pool, c.cell_nodes);
  if (cfg.format == OutputFormat::json) {
    json checks = json::array();
    for (const auto& ch : rep.checks) {
      checks.push_back({{"name", ch.name},
                        {"lhs", ch.lhs},
                        {"relation", ch.relation},
                        {"rhs", ch.rhs},
                        {"pass", ch.pass}});
    }
    return json{{"checks", checks},
                {"gamma_eps", rep.gamma_eps},
                {"L1", rep.l1 ? json(*rep.l1) : json()},
                {"all_pass", rep.all_pass()}}
               .dump(2) +
           "\n";
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& ch : rep.checks) {
    rows.push_back({ch.name, format_general(ch.lhs, 6), ch.relation,
                    format_general(ch.rhs, 6), ch.pass ? "pass" : "FAIL"});
  }
  std::string out = render_table({"constraint", "lhs", "rel", "rhs", "result"}, rows);
  out += "gamma_eps " + format_general(rep.gamma_eps, 6) + "\n";
  if (rep.l1) out += "L1 " + std::to_string(*rep.l1) + "\n";
  out += std::string("all_pass ") + (rep.all_pass() ? "true" : "false") + "\n";
  return out;
}

CommandResult run_selftest_command(const RunConfig& cfg) {
  const auto suites = run_selftest(cfg.seed, cfg.selftest.instances, cfg.selftest.draws);
  CommandResult res;
  res.selftest_failed = !std::all_of(suites.begin(), suites.end(),
                                     [](const SuiteResult& s) { return s.passed(); });
  if (cfg.format == OutputFormat::json) {
    json arr = json::array();
    for (const auto& s : suites) {
      arr.push_back({{"name", s.name},
                     {"cases", s.cases},
                     {"failures", s.failures},
                     {"first_failure", s.first_failure},
                     {"passed", s.passed()}});
    }
    res.text = json{{"suites", arr}, {"passed", !res.selftest_failed}}.dump(2) + "\n";
    return res;
  }
  std::ostringstream out;
  for (const auto& s : suites) {
    out << (s.passed() ? "PASS " : "FAIL ") << s.name << " cases=" << s.cases
        << " failures=" << s.failures;
    if (!s.first_failure.empty()) out << " first: " << s.first_failure;
    out << '\n';
  }
  res.text = out.str();
  return res;
}

}  // namespace

std::string_view to_string(Command c) noexcept {
  switch (c) {
    case Command::generate:
      return "generate";
    case Command::analyze:
      return "analyze";
    case Command::sweep:
      return "sweep";
    case Command::bounds:
      return "bounds";
    case Command::check_constants:
      return "check-constants";
    case Command::selftest:
      break;
  }
  return "selftest";
}

std::optional<Command> parse_command(std::string_view s) noexcept {
  for (Command c : {Command::generate, Command::analyze, Command::sweep, Command::bounds,
                    Command::check_constants, Command::selftest}) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

std::string_view to_string(OutputFormat f) noexcept {
  switch (f) {
    case OutputFormat::csv:
      return "csv";
    case OutputFormat::json:
      return "json";
    case OutputFormat::edges:
      return "edges";
    case OutputFormat::text:
      break;
  }
  return "text";
}

RunConfig parse_config(const json& doc) {
  FieldReader r(doc, "");
  RunConfig cfg;
  const std::string command = r.text("command", "");
  const auto c = parse_command(command);
  if (!c) {
    throw ValidationError(
        "command must be one of generate, analyze, sweep, bounds, check-constants, selftest");
  }
  cfg.command = *c;
  cfg.seed = r.count("seed", cfg.seed);
  const std::uint64_t workers = r.count("workers", 1);
  if (workers < 1 || workers > 4096) throw ValidationError("workers must lie in [1,4096]");
  cfg.workers = static_cast<unsigned>(workers);
  cfg.output = r.text("output", "");

  cfg.format = default_format(cfg.command);
  if (r.has("format")) {
    const auto f = parse_format(r.text("format", ""));
    const auto allowed = allowed_formats(cfg.command);
    if (!f || std::find(allowed.begin(), allowed.end(), *f) == allowed.end()) {
      std::string names;
      for (auto a : allowed) names += (names.empty() ? "" : ", ") + std::string(to_string(a));
      throw ValidationError("format must be one of " + names + " for " + command);
    }
    cfg.format = *f;
  }

  const json empty = json::object();
  auto section = [&](const char* key) -> const json& {
    return r.has(key) ? r.raw(key) : empty;
  };
  // Every section present is validated, whichever command runs.
  const bool need_generate = cfg.command == Command::generate;
  if (r.has("generate") || need_generate) cfg.generate = parse_generate(section("generate"));
  if (r.has("analyze") || cfg.command == Command::analyze) {
    cfg.analyze = parse_analyze(section("analyze"));
  }
  if (r.has("sweep") || cfg.command == Command::sweep) cfg.sweep = parse_sweep(section("sweep"));
  if (r.has("bounds") || cfg.command == Command::bounds) {
    cfg.bounds = parse_bounds(section("bounds"));
  }
  cfg.check_constants = parse_constants(section("check_constants"));
  cfg.selftest = parse_selftest(section("selftest"));
  r.finish();
  return cfg;
}

RunConfig parse_config_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(doc);
}

json to_json(const RunConfig& cfg) {
  json j;
  j["command"] = std::string(to_string(cfg.command));
  j["seed"] = cfg.seed;
  j["workers"] = cfg.workers;
  j["format"] = std::string(to_string(cfg.format));
  j["output"] = cfg.output;
  switch (cfg.command) {
    case Command::generate: {
      const auto& p = cfg.generate;
      j["generate"] = {{"n", p.n},
                       {"pool", p.pool.pool_size},
                       {"ring", p.pool.ring_size},
                       {"radius", p.radius},
                       {"boundary", std::string(to_string(p.boundary))},
                       {"rule", std::string(to_string(p.rule))}};
      break;
    }
    case Command::analyze:
      j["analyze"] = {{"input", cfg.analyze.input},
                      {"cells", cfg.analyze.cells},
                      {"delta", cfg.analyze.delta},
                      {"theta", cfg.analyze.theta}};
      break;
    case Command::sweep: {
      json pts = json::array();
      for (const auto& p : cfg.sweep.points) pts.push_back(to_json(p));
      j["sweep"] = {{"trials", cfg.sweep.trials},
                    {"cells", cfg.sweep.cells},
                    {"epsilon", cfg.sweep.epsilon ? json(*cfg.sweep.epsilon) : json()},
                    {"points", pts}};
      break;
    }
    case Command::bounds: {
      json params = json::object();
      for (const auto& [name, values] : cfg.bounds.params) params[name] = values;
      j["bounds"] = {{"eval", cfg.bounds.eval}, {"params", params}};
      break;
    }
    case Command::check_constants: {
      const auto& c = cfg.check_constants;
      j["check_constants"] = {{"sigma", c.consts.sigma},
                              {"lambda", c.consts.lambda},
                              {"mu", c.consts.mu},
                              {"delta", c.consts.delta},
                              {"R", c.consts.R},
                              {"epsilon", c.consts.epsilon},
                              {"alpha", c.consts.alpha},
                              {"pool", c.pool.pool_size},
                              {"ring", c.pool.ring_size},
                              {"cell_nodes", c.cell_nodes ? json(*c.cell_nodes) : json()}};
      break;
    }
    case Command::selftest:
      j["selftest"] = {{"instances", cfg.selftest.instances}, {"draws", cfg.selftest.draws}};
      break;
  }
  return j;
}

std::vector<std::string> bound_evaluators() {
  std::vector<std::string> names;
  for (const auto& e : evaluators()) names.push_back(e.name);
  return names;
}

std::vector<std::string> bound_parameters(std::string_view eval) {
  return find_evaluator(eval).params;
}

CommandResult run_command(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::generate:
      return {run_generate(cfg)};
    case Command::analyze:
      return {run_analyze(cfg)};
    case Command::sweep:
      return {run_sweep(cfg)};
    case Command::bounds:
      return {run_bounds(cfg)};
    case Command::check_constants:
      return {run_constants(cfg)};
    case Command::selftest:
      break;
  }
  return run_selftest_command(cfg);
}

}  // namespace rkgrgg
