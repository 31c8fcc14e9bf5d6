#include "rkgrgg/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <ostream>
#include <thread>

#include "json_fields.hpp"
#include "rkgrgg/combinatorics.hpp"
#include "rkgrgg/connectivity.hpp"
#include "rkgrgg/error.hpp"
#include "rkgrgg/format.hpp"
#include "rkgrgg/random.hpp"

namespace rkgrgg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::uint64_t kMaxPool = std::uint64_t{1} << 53;

double beta_of(std::uint64_t p, std::uint64_t k) {
  return link_probability({p, k}).beta;
}

double rel_error(double achieved, double target) {
  return std::fabs(achieved - target) / std::fabs(target);
}

std::uint64_t fnv1a(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

double c_schedule(const RegimeSpec& spec) {
  if (!spec.loglog) return spec.value;
  return spec.value * std::log(std::log(static_cast<double>(spec.n)));
}

}  // namespace

std::string_view to_string(RegimeKind k) noexcept {
  switch (k) {
    case RegimeKind::critical:
      return "critical";
    case RegimeKind::supercritical:
      return "supercritical";
    case RegimeKind::rgg_only:
      return "rgg_only";
    case RegimeKind::rkg_only:
      break;
  }
  return "rkg_only";
}

std::optional<RegimeKind> parse_regime(std::string_view s) noexcept {
  if (s == "critical") return RegimeKind::critical;
  if (s == "supercritical") return RegimeKind::supercritical;
  if (s == "rgg_only") return RegimeKind::rgg_only;
  if (s == "rkg_only") return RegimeKind::rkg_only;
  return std::nullopt;
}

double DensityLaw::evaluate(std::uint64_t n) const {
  if (kind == Kind::absolute) return value;
  return std::pow(std::log(static_cast<double>(n)), value);
}

void validate(const RegimeSpec& spec) {
  if (spec.n < 2) throw ValidationError("n must be >= 2");
  if (spec.n > std::uint64_t{0xffffffff}) {
    throw ValidationError("n must fit in 32-bit node ids");
  }
  if (!std::isfinite(spec.value)) throw ValidationError("value must be finite");
  if (!(spec.delta > 0.0 && spec.delta < 1.0)) {
    throw ValidationError("delta must lie in (0,1)");
  }
  if (!(spec.sigma > 0.0)) throw ValidationError("sigma must be > 0");
  if (!(spec.theta > 0.0 && spec.theta <= 0.5)) {
    throw ValidationError("theta must lie in (0,0.5]");
  }
  if (!(spec.density.value > 0.0) || !std::isfinite(spec.density.value)) {
    throw ValidationError("density must be > 0");
  }
  if (spec.density.kind == DensityLaw::Kind::absolute &&
      spec.density.value >= static_cast<double>(spec.n)) {
    throw ValidationError("density must be < n");
  }
  if (spec.regime == RegimeKind::supercritical && spec.value < 0.0) {
    throw ValidationError("margin must be >= 0");
  }
  if (spec.ring_size && *spec.ring_size < 1) {
    throw ValidationError("ring must be >= 1");
  }
  if (spec.k_max < 1) throw ValidationError("k_max must be >= 1");
  if (spec.ring_size && spec.k_max < *spec.ring_size) {
    throw ValidationError("k_max must be >= ring");
  }
  if (!(spec.tolerance >= 0.0)) throw ValidationError("tolerance must be >= 0");
  if (!(spec.k2p_ceiling > 0.0)) throw ValidationError("k2p_ceiling must be > 0");
  if (!(spec.density_floor >= 0.0)) {
    throw ValidationError("density_floor must be >= 0");
  }
  if (!(spec.density_ceiling > 0.0)) {
    throw ValidationError("density_ceiling must be > 0");
  }
}

nlohmann::json to_json(const RegimeSpec& spec) {
  nlohmann::json density;
  if (spec.density.kind == DensityLaw::Kind::absolute) {
    density["absolute"] = spec.density.value;
  } else {
    density["log_power"] = spec.density.value;
  }
  nlohmann::json j;
  j["n"] = spec.n;
  j["regime"] = std::string(to_string(spec.regime));
  j["value"] = spec.value;
  j["loglog"] = spec.loglog;
  j["density"] = density;
  j["sigma"] = spec.sigma;
  j["delta"] = spec.delta;
  j["boundary"] = std::string(to_string(spec.boundary));
  j["theta"] = spec.theta;
  j["ring"] = spec.ring_size ? nlohmann::json(*spec.ring_size) : nlohmann::json();
  j["k_max"] = spec.k_max;
  j["tolerance"] = spec.tolerance;
  j["k2p_ceiling"] = spec.k2p_ceiling;
  j["density_floor"] = spec.density_floor;
  j["density_ceiling"] = spec.density_ceiling;
  return j;
}

RegimeSpec regime_from_json(const nlohmann::json& j) {
  detail::FieldReader r(j, "");
  RegimeSpec s;
  s.n = r.count("n", s.n);
  const std::string regime = r.text("regime", "critical");
  const auto kind = parse_regime(regime);
  if (!kind) throw ValidationError("regime must be one of critical, supercritical, rgg_only, rkg_only");
  s.regime = *kind;
  s.value = r.number("value", s.value);
  s.loglog = r.flag("loglog", s.loglog);
  if (r.has("density")) {
    detail::FieldReader d(r.raw("density"), "density");
    const bool power = d.has("log_power");
    const bool absolute = d.has("absolute");
    if (power == absolute) {
      throw ValidationError("density must have exactly one of log_power, absolute");
    }
    s.density.kind = power ? DensityLaw::Kind::log_power : DensityLaw::Kind::absolute;
    s.density.value = d.number(power ? "log_power" : "absolute", 0.0);
    d.finish();
  }
  s.sigma = r.number("sigma", s.sigma);
  s.delta = r.number("delta", s.delta);
  const std::string boundary = r.text("boundary", "square");
  const auto b = parse_boundary(boundary);
  if (!b) throw ValidationError("boundary must be square or torus");
  s.boundary = *b;
  s.theta = r.number("theta", s.theta);
  s.ring_size = r.optional_count("ring");
  s.k_max = r.count("k_max", s.k_max);
  s.tolerance = r.number("tolerance", s.tolerance);
  s.k2p_ceiling = r.number("k2p_ceiling", s.k2p_ceiling);
  s.density_floor = r.number("density_floor", s.density_floor);
  s.density_ceiling = r.number("density_ceiling", s.density_ceiling);
  r.finish();
  validate(s);
  return s;
}

// ---------------------------------------------------------------------------
// Regime solver

std::optional<PoolChoice> choose_key_pool(double target_beta, std::uint64_t p_min,
                                          std::uint64_t k_first, std::uint64_t k_max,
                                          double tolerance, bool at_least) {
  if (!(target_beta > 0.0) || k_first < 1) return std::nullopt;
  std::optional<PoolChoice> best;
  auto consider = [&](std::uint64_t p, std::uint64_t k) {
    const double b = beta_of(p, k);
    if (at_least && b < target_beta) return;
    const double err = rel_error(b, target_beta);
    if (!best || err < best->rel_error) best = PoolChoice{{p, k}, b, err};
  };
  for (std::uint64_t k = k_first; k <= k_max; ++k) {
    const std::uint64_t lo = std::max({2 * k, p_min, std::uint64_t{2}});
    if (beta_of(lo, k) < target_beta) {
      // beta decreases in P, so lo is the closest this K can get.
      consider(lo, k);
    } else {
      // Largest P with beta(P) >= target.
      std::uint64_t good = lo;
      std::uint64_t bad = lo;
      while (bad < kMaxPool && beta_of(bad, k) >= target_beta) {
        good = bad;
        bad = std::min(kMaxPool, bad * 2);
      }
      if (beta_of(bad, k) >= target_beta) {
        good = bad;
      } else {
        while (bad - good > 1) {
          const std::uint64_t mid = good + (bad - good) / 2;
          (beta_of(mid, k) >= target_beta ? good : bad) = mid;
        }
        consider(bad, k);
      }
      consider(good, k);
    }
    if (best && best->rel_error <= tolerance) break;
  }
  return best;
}

bool RegimeSolution::all_flags_pass() const noexcept {
  return std::all_of(flags.begin(), flags.end(),
                     [](const HypothesisFlag& f) { return f.pass; });
}

RegimeSolution solve_regime(const RegimeSpec& spec) {
  validate(spec);
  const double nd = static_cast<double>(spec.n);
  const double logn = std::log(nd);

  RegimeSolution sol;
  sol.params.n = spec.n;
  sol.params.boundary = spec.boundary;

  double target_beta = 1.0;
  double p_min = 0.0;
  bool at_least = false;
  switch (spec.regime) {
    case RegimeKind::critical:
    case RegimeKind::supercritical: {
      sol.density = spec.density.evaluate(spec.n);
      sol.area = sol.density / nd;
      sol.params.radius = std::sqrt(sol.area / kPi);
      sol.params.rule = EdgeRule::intersection;
      if (spec.regime == RegimeKind::critical) {
        sol.target_ab = (logn + spec.value) / nd;
      } else {
        sol.target_ab = 2.0 * kPi / (1.0 - spec.delta) * (1.0 + spec.value) * logn / nd;
        at_least = true;
      }
      target_beta = sol.target_ab / sol.area;
      p_min = spec.sigma * sol.density / kPi;  // sigma n r^2
      break;
    }
    case RegimeKind::rgg_only: {
      sol.area = (logn + c_schedule(spec)) / nd;
      sol.density = nd * sol.area;
      sol.target_ab = sol.area;
      sol.params.rule = EdgeRule::geometric_only;
      sol.params.pool = {2, 1};
      if (!(sol.area > 0.0)) {
        sol.feasible = false;
        sol.note = "log n + c_n must be positive";
        sol.area = std::numeric_limits<double>::min();
      }
      sol.params.radius = std::sqrt(sol.area / kPi);
      sol.beta = 1.0;
      sol.achieved_ab = sol.area;
      sol.achieved_ak2p = sol.area;
      sol.rel_error = rel_error(sol.achieved_ab, sol.target_ab);
      sol.alpha = nd * sol.achieved_ab / logn;
      sol.flags.push_back({"d_n/n <= ceiling", sol.density / nd <= spec.density_ceiling});
      sol.flags.push_back({"radius <= 1/2", sol.params.radius <= 0.5});
      return sol;
    }
    case RegimeKind::rkg_only: {
      sol.area = 1.0;
      sol.density = nd;
      sol.params.radius = std::numbers::sqrt2;
      sol.params.rule = EdgeRule::key_only;
      sol.target_ab = (logn + c_schedule(spec)) / nd;
      target_beta = sol.target_ab;
      p_min = spec.sigma * nd;
      break;
    }
  }

  const auto pool_floor = static_cast<std::uint64_t>(std::ceil(p_min - 1e-9));
  std::optional<PoolChoice> choice;
  if (target_beta > 0.0 && spec.ring_size == std::uint64_t{1}) {
    const double ideal = std::round(1.0 / target_beta);
    const auto p = std::max<std::uint64_t>(
        std::max<std::uint64_t>(2, pool_floor),
        ideal >= static_cast<double>(kMaxPool) ? kMaxPool
                                               : static_cast<std::uint64_t>(ideal));
    const double b = 1.0 / static_cast<double>(p);
    choice = PoolChoice{{p, 1}, b, rel_error(b, target_beta)};
    if (static_cast<double>(p) != ideal) sol.note = "P raised to the pool-size floor";
  } else if (target_beta > 0.0) {
    const std::uint64_t k_first = spec.ring_size.value_or(2);
    const std::uint64_t k_last = spec.ring_size.value_or(spec.k_max);
    choice = choose_key_pool(target_beta, pool_floor, k_first, k_last,
                             spec.tolerance, at_least);
    if (!choice) {
      // Closest achievable point: the largest beta in the search range.
      const std::uint64_t p = std::max({2 * k_last, pool_floor, std::uint64_t{2}});
      const double b = beta_of(p, k_last);
      choice = PoolChoice{{p, k_last}, b, rel_error(b, target_beta)};
    }
  }

  if (!choice) {
    sol.feasible = false;
    sol.note = "target a*beta is not positive";
    const std::uint64_t k = spec.ring_size.value_or(2);
    choice = PoolChoice{{kMaxPool, k}, beta_of(kMaxPool, k), kNaN};
  } else if (target_beta > 1.0 || (at_least && choice->beta < target_beta)) {
    sol.feasible = false;
    sol.note = "target beta exceeds the largest achievable link probability";
  }

  sol.params.pool = choice->pool;
  sol.beta = choice->beta;
  sol.rel_error = target_beta > 0.0 ? rel_error(sol.beta, target_beta) : kNaN;
  sol.achieved_ab = sol.area * sol.beta;
  const double k = static_cast<double>(choice->pool.ring_size);
  const double p = static_cast<double>(choice->pool.pool_size);
  sol.achieved_ak2p = sol.area * k * k / p;
  sol.alpha = nd * sol.achieved_ab / logn;

  sol.flags.push_back({"K >= 2", choice->pool.ring_size >= 2});
  sol.flags.push_back({"P >= 2K", choice->pool.is_valid()});
  if (spec.regime == RegimeKind::rkg_only) {
    sol.flags.push_back({"P >= sigma n", p >= spec.sigma * nd});
  } else {
    sol.flags.push_back({"P >= sigma n r^2", p >= p_min});
  }
  sol.flags.push_back({"K^2/P <= ceiling", k * k / p <= spec.k2p_ceiling});
  if (spec.regime != RegimeKind::rkg_only) {
    sol.flags.push_back({"d_n/log n >= floor", sol.density / logn >= spec.density_floor});
    sol.flags.push_back({"d_n/n <= ceiling", sol.density / nd <= spec.density_ceiling});
  }
  if (spec.regime == RegimeKind::supercritical) {
    const double threshold = 2.0 * kPi / (1.0 - spec.delta) * logn / nd;
    sol.flags.push_back({"a beta >= 2 pi/(1-delta) log n/n", sol.achieved_ab >= threshold});
    sol.flags.push_back({"a K^2/P >= 2 pi/(1-delta) log n/n", sol.achieved_ak2p >= threshold});
  } else {
    sol.flags.push_back({"relative error <= tolerance", sol.rel_error <= spec.tolerance});
  }
  return sol;
}

nlohmann::json to_json(const RegimeSolution& sol) {
  nlohmann::json flags = nlohmann::json::array();
  for (const auto& f : sol.flags) flags.push_back({{"name", f.name}, {"pass", f.pass}});
  return {
      {"n", sol.params.n},
      {"pool", sol.params.pool.pool_size},
      {"ring", sol.params.pool.ring_size},
      {"radius", sol.params.radius},
      {"boundary", std::string(to_string(sol.params.boundary))},
      {"rule", std::string(to_string(sol.params.rule))},
      {"density", sol.density},
      {"area", sol.area},
      {"beta", sol.beta},
      {"target_ab", sol.target_ab},
      {"achieved_ab", sol.achieved_ab},
      {"achieved_ak2p", sol.achieved_ak2p},
      {"rel_error", sol.rel_error},
      {"alpha", sol.alpha},
      {"feasible", sol.feasible},
      {"note", sol.note},
      {"flags", flags},
  };
}

// ---------------------------------------------------------------------------
// Trials

TrialOutcome run_trial(const ModelParams& params, std::uint64_t seed,
                       const TrialOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  TrialOutcome out;
  out.seed = seed;
  const IntersectionGraph g = generate_instance(params, seed);
  const ConnectivityReport rep = analyze(g.topology());
  out.is_connected = rep.is_connected;
  out.isolated_nodes = rep.isolated_nodes;
  out.min_degree = rep.min_degree;
  out.component_count = rep.component_count;
  out.node0_isolated = g.topology().degree(0) == 0;
  if (options.cells) {
    const DualTessellation specs = make_dual_tessellations(params.radius, options.theta);
    DualConnectivity dc = dual_tessellation_connectivity(g, specs, options.delta);
    out.cells_checked = true;
    out.t1 = dc.t1;
    out.t2 = dc.t2;
    out.all_dense = dc.all_dense;
    if (options.keep_cell_stats) out.cells = std::move(dc);
  }
  out.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

// ---------------------------------------------------------------------------
// Estimates

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) throw DomainError("wilson_interval: trials must be > 0");
  if (successes > trials) throw DomainError("wilson_interval: successes exceed trials");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  Interval ci{std::max(0.0, center - half), std::min(1.0, center + half)};
  if (successes == 0) ci.lower = 0.0;
  if (successes == trials) ci.upper = 1.0;
  return ci;
}

Estimate estimate_counts(std::uint64_t successes, std::uint64_t trials) {
  Estimate e;
  e.successes = successes;
  e.trials = trials;
  e.frequency = static_cast<double>(successes) / static_cast<double>(trials);
  e.ci95 = wilson_interval(successes, trials, kZ95);
  e.ci99 = wilson_interval(successes, trials, kZ99);
  return e;
}

Estimate estimate(std::span<const TrialOutcome> outcomes,
                  const std::function<bool(const TrialOutcome&)>& predicate) {
  if (outcomes.empty()) throw DomainError("estimate: no outcomes");
  const auto hits = static_cast<std::uint64_t>(
      std::count_if(outcomes.begin(), outcomes.end(), predicate));
  return estimate_counts(hits, outcomes.size());
}

void Tally::add(const TrialOutcome& t) noexcept {
  ++trials;
  if (!t.is_connected) ++disconnected;
  if (t.isolated_nodes > 0) ++has_isolated;
  if (t.node0_isolated) ++node0_isolated;
  if (t.cells_checked) {
    ++cells_checked;
    if (t.all_dense) ++all_dense;
    if (t.premise()) {
      ++premise;
      if (!t.is_connected) ++implication_violations;
    }
  }
}

Tally& Tally::merge(const Tally& o) noexcept {
  trials += o.trials;
  disconnected += o.disconnected;
  has_isolated += o.has_isolated;
  node0_isolated += o.node0_isolated;
  cells_checked += o.cells_checked;
  premise += o.premise;
  all_dense += o.all_dense;
  implication_violations += o.implication_violations;
  return *this;
}

// ---------------------------------------------------------------------------
// Sweeps

std::uint64_t point_seed(const RegimeSpec& spec, std::uint64_t master_seed) {
  return derive_seed(master_seed, StreamTag::sweep_point, fnv1a(to_json(spec).dump()));
}

SweepResult sweep(std::span<const RegimeSpec> grid, const SweepOptions& options,
                  const TrialObserver& observer) {
  if (grid.empty()) throw ValidationError("sweep grid must not be empty");
  if (options.trials == 0) throw ValidationError("trials must be >= 1");

  SweepResult result;
  result.trials = options.trials;
  result.master_seed = options.master_seed;
  result.points.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    SweepPoint& pt = result.points[i];
    pt.spec = grid[i];
    pt.solution = solve_regime(grid[i]);
    pt.point_seed = point_seed(grid[i], options.master_seed);
  }

  const std::uint64_t trials = options.trials;
  const std::size_t total = grid.size() * trials;
  std::vector<TrialOutcome> outcomes(total);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex mu;

  auto worker = [&] {
    for (;;) {
      const std::size_t task = next.fetch_add(1);
      if (task >= total || failed.load()) return;
      const std::size_t p = task / trials;
      const std::uint64_t t = task % trials;
      const SweepPoint& pt = result.points[p];
      TrialOptions topt;
      topt.cells = options.cells;
      topt.delta = pt.spec.delta;
      topt.theta = pt.spec.theta;
      try {
        outcomes[task] = run_trial(pt.solution.params,
                                   derive_seed(pt.point_seed, StreamTag::trial, t), topt);
        if (observer) {
          std::lock_guard lock(mu);
          observer(p, outcomes[task]);
        }
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };

  const unsigned workers = std::max(1U, options.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  for (std::size_t i = 0; i < result.points.size(); ++i) {
    SweepPoint& pt = result.points[i];
    for (std::uint64_t t = 0; t < trials; ++t) pt.tally.add(outcomes[i * trials + t]);
    pt.disconnected = estimate_counts(pt.tally.disconnected, trials);
    pt.isolated = estimate_counts(pt.tally.has_isolated, trials);
    if (pt.tally.cells_checked > 0) {
      pt.premise = estimate_counts(pt.tally.premise, pt.tally.cells_checked);
    }

    const RegimeSpec& s = pt.spec;
    const RegimeSolution& sol = pt.solution;
    pt.bound_floor = kNaN;
    pt.disconnect.floor = kNaN;
    pt.disconnect.log_floor = kNaN;
    pt.disconnect.finite_n = kNaN;
    pt.disconnect.epsilon = kNaN;
    pt.disconnect.regime_ok = false;
    if (s.regime == RegimeKind::critical) {
      const double eps = options.epsilon.value_or(default_epsilon(sol.density, s.n));
      pt.disconnect = disconnect_lower_bound(s.value, s.n, eps);
      pt.bound_floor = pt.disconnect.floor;
    }
    const DualTessellation tess = make_dual_tessellations(sol.params.radius, s.theta);
    pt.cell_side = tess.first.cell_side;
    pt.bound_denseness =
        denseness_bound(static_cast<double>(s.n), pt.cell_side, s.delta).per_cell;
    pt.cell_isolation = cell_isolation_bound(sol.alpha, s.delta, s.n).value;
  }
  return result;
}

void write_sweep_csv(const SweepResult& result, std::ostream& out) {
  out << kSweepCsvHeader << '\n';
  for (const SweepPoint& pt : result.points) {
    const ModelParams& mp = pt.solution.params;
    out << mp.n << ',' << mp.pool.pool_size << ',' << mp.pool.ring_size << ','
        << format_double(mp.radius) << ',' << to_string(mp.boundary) << ','
        << to_string(pt.spec.regime) << ',' << format_double(pt.spec.value) << ','
        << pt.tally.trials << ',' << format_double(pt.disconnected.frequency) << ','
        << format_double(pt.disconnected.ci95.lower) << ','
        << format_double(pt.disconnected.ci95.upper) << ','
        << format_double(pt.isolated.frequency) << ','
        << format_double(pt.bound_floor) << ','
        << format_double(pt.bound_denseness) << ','
        << format_double(pt.solution.achieved_ab) << '\n';
  }
}

namespace {

nlohmann::json to_json(const Estimate& e) {
  if (e.trials == 0) return nullptr;
  return {
      {"successes", e.successes},
      {"trials", e.trials},
      {"frequency", e.frequency},
      {"wilson95", {e.ci95.lower, e.ci95.upper}},
      {"wilson99", {e.ci99.lower, e.ci99.upper}},
      {"width95", e.ci95.width()},
  };
}

nlohmann::json finite_or_null(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json();
}

}  // namespace

nlohmann::json to_json(const SweepResult& result) {
  nlohmann::json points = nlohmann::json::array();
  for (const SweepPoint& pt : result.points) {
    const Tally& t = pt.tally;
    points.push_back({
        {"spec", to_json(pt.spec)},
        {"solution", to_json(pt.solution)},
        {"point_seed", pt.point_seed},
        {"tally",
         {{"trials", t.trials},
          {"disconnected", t.disconnected},
          {"has_isolated", t.has_isolated},
          {"node0_isolated", t.node0_isolated},
          {"cells_checked", t.cells_checked},
          {"premise", t.premise},
          {"all_dense", t.all_dense},
          {"implication_violations", t.implication_violations}}},
        {"disconnected", to_json(pt.disconnected)},
        {"isolated", to_json(pt.isolated)},
        {"tessellations_connected", to_json(pt.premise)},
        {"bounds",
         {{"disconnect_floor", finite_or_null(pt.bound_floor)},
          {"disconnect_finite_n", finite_or_null(pt.disconnect.finite_n)},
          {"epsilon", finite_or_null(pt.disconnect.epsilon)},
          {"disconnect_regime_ok", pt.disconnect.regime_ok},
          {"denseness_per_cell", pt.bound_denseness},
          {"cell_side", pt.cell_side},
          {"cell_isolation", pt.cell_isolation}}},
    });
  }
  return {{"master_seed", result.master_seed}, {"trials", result.trials},
          {"points", points}};
}

}  // namespace rkgrgg
