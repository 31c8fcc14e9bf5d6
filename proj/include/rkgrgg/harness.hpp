#pragma once

// Regime solving, seeded Monte Carlo trials and their aggregation.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rkgrgg/bounds.hpp"
#include "rkgrgg/graph.hpp"
#include "rkgrgg/tessellation.hpp"

namespace rkgrgg {

// --- regimes ----------------------------------------------------------------

enum class RegimeKind { critical, supercritical, rgg_only, rkg_only };

std::string_view to_string(RegimeKind k) noexcept;
std::optional<RegimeKind> parse_regime(std::string_view s) noexcept;

/// d_n = (log n)^exponent, or a fixed absolute value.
struct DensityLaw {
  enum class Kind { log_power, absolute };
  Kind kind = Kind::log_power;
  double value = 1.5;

  [[nodiscard]] double evaluate(std::uint64_t n) const;
  friend bool operator==(const DensityLaw&, const DensityLaw&) = default;
};

struct RegimeSpec {
  std::uint64_t n = 1000;
  RegimeKind regime = RegimeKind::critical;
  // critical: c1; supercritical: relative margin over 2 pi/(1-delta);
  // rgg_only / rkg_only: c_n, or its coefficient on log log n.
  double value = 1.0;
  bool loglog = false;
  DensityLaw density;
  double sigma = 1.0;
  double delta = 0.5;
  Boundary boundary = Boundary::square;
  double theta = 0.5;
  std::optional<std::uint64_t> ring_size;
  std::uint64_t k_max = 64;
  double tolerance = 1e-3;      // accepted relative error on beta
  double k2p_ceiling = 0.5;     // K^2/P <= ceiling
  double density_floor = 1.0;   // d_n / log n >= floor
  double density_ceiling = 0.5; // d_n / n <= ceiling

  friend bool operator==(const RegimeSpec&, const RegimeSpec&) = default;
};

/// Throws ValidationError naming the offending field.
void validate(const RegimeSpec& spec);

nlohmann::json to_json(const RegimeSpec& spec);
RegimeSpec regime_from_json(const nlohmann::json& j);

struct HypothesisFlag {
  std::string name;
  bool pass = false;
};

struct PoolChoice {
  KeyPoolParams pool;
  double beta = 0.0;
  double rel_error = 0.0;
};

/// Integer (K, P) with P >= max(2K, p_min) whose exact beta is closest to
/// target_beta. K is scanned upward from k_first; the first K within
/// `tolerance` wins. With `at_least`, only beta >= target_beta qualifies.
/// Returns nullopt when no pool can reach the target.
std::optional<PoolChoice> choose_key_pool(double target_beta, std::uint64_t p_min,
                                          std::uint64_t k_first, std::uint64_t k_max,
                                          double tolerance, bool at_least = false);

struct RegimeSolution {
  ModelParams params;
  double density = 0.0;       // d_n
  double area = 0.0;          // a_n, or 1 for key-only graphs
  double beta = 1.0;
  double target_ab = 0.0;
  double achieved_ab = 0.0;   // a * exact beta
  double achieved_ak2p = 0.0; // a * K^2 / P
  double rel_error = 0.0;
  double alpha = 0.0;         // n a beta / log n
  bool feasible = true;
  std::string note;
  std::vector<HypothesisFlag> flags;

  [[nodiscard]] bool all_flags_pass() const noexcept;
};

RegimeSolution solve_regime(const RegimeSpec& spec);

nlohmann::json to_json(const RegimeSolution& sol);

// --- trials -----------------------------------------------------------------

struct TrialOptions {
  bool cells = false;         // evaluate the dual tessellations
  bool keep_cell_stats = false;
  double delta = 0.5;
  double theta = 0.5;
};

struct TrialOutcome {
  std::uint64_t seed = 0;
  bool is_connected = false;
  std::size_t isolated_nodes = 0;
  std::size_t min_degree = 0;
  std::size_t component_count = 0;
  bool node0_isolated = false;
  bool cells_checked = false;
  bool t1 = false;
  bool t2 = false;
  bool all_dense = false;
  std::optional<DualConnectivity> cells;
  double wall_time = 0.0;     // seconds

  [[nodiscard]] bool premise() const noexcept { return cells_checked && t1 && t2; }
};

/// Deterministic in (params, seed).
TrialOutcome run_trial(const ModelParams& params, std::uint64_t seed,
                       const TrialOptions& options = {});

// --- estimates --------------------------------------------------------------

inline constexpr double kZ95 = 1.959963984540054;
inline constexpr double kZ99 = 2.5758293035489004;

struct Interval {
  double lower = 0.0;
  double upper = 1.0;
  [[nodiscard]] double width() const noexcept { return upper - lower; }
  [[nodiscard]] bool contains(double v) const noexcept {
    return lower <= v && v <= upper;
  }
};

/// Wilson score interval for `successes` out of `trials` (> 0).
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z);

struct Estimate {
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double frequency = 0.0;
  Interval ci95;
  Interval ci99;
};

Estimate estimate_counts(std::uint64_t successes, std::uint64_t trials);

/// Throws DomainError on an empty set.
Estimate estimate(std::span<const TrialOutcome> outcomes,
                  const std::function<bool(const TrialOutcome&)>& predicate);

/// Per-point counters. merge() is associative and commutative.
struct Tally {
  std::uint64_t trials = 0;
  std::uint64_t disconnected = 0;
  std::uint64_t has_isolated = 0;
  std::uint64_t node0_isolated = 0;
  std::uint64_t cells_checked = 0;
  std::uint64_t premise = 0;            // T1 and T2
  std::uint64_t all_dense = 0;
  std::uint64_t implication_violations = 0;

  void add(const TrialOutcome& t) noexcept;
  Tally& merge(const Tally& other) noexcept;
  friend bool operator==(const Tally&, const Tally&) = default;
};

// --- sweeps -----------------------------------------------------------------

struct SweepOptions {
  std::uint64_t trials = 100;
  std::uint64_t master_seed = 1;
  unsigned workers = 1;
  bool cells = true;
  std::optional<double> epsilon;  // default (1 - log d_n / log n) / 2
};

struct SweepPoint {
  RegimeSpec spec;
  RegimeSolution solution;
  std::uint64_t point_seed = 0;
  Tally tally;
  Estimate disconnected;
  Estimate isolated;
  Estimate premise;
  double bound_floor = 0.0;          // e^{-c1}/4 (critical points), else nan
  DisconnectBound disconnect;
  double bound_denseness = 0.0;      // per-cell Chernoff bound
  double cell_isolation = 0.0;
  double cell_side = 0.0;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  std::uint64_t trials = 0;
  std::uint64_t master_seed = 0;
};

/// Seed of a grid point: a hash of its canonical parameters mixed with the
/// master seed, so reordering the grid never changes a point's trials.
std::uint64_t point_seed(const RegimeSpec& spec, std::uint64_t master_seed);

/// Observer called once per finished trial (from worker threads, serialized).
using TrialObserver = std::function<void(std::size_t point, const TrialOutcome&)>;

SweepResult sweep(std::span<const RegimeSpec> grid, const SweepOptions& options,
                  const TrialObserver& observer = {});

inline constexpr std::string_view kSweepCsvHeader =
    "n,P,K,radius,boundary,regime,c1_or_margin,trials,freq_disconnected,"
    "wilson_lo,wilson_hi,freq_isolated,bound_floor,bound_denseness,achieved_ab";

void write_sweep_csv(const SweepResult& result, std::ostream& out);
nlohmann::json to_json(const SweepResult& result);

}  // namespace rkgrgg
