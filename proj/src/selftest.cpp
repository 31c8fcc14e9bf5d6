#include "rkgrgg/selftest.hpp"

#include <array>
#include <cmath>
#include <exception>

#include "rkgrgg/combinatorics.hpp"
#include "rkgrgg/connectivity.hpp"
#include "rkgrgg/format.hpp"
#include "rkgrgg/graph.hpp"
#include "rkgrgg/random.hpp"

namespace rkgrgg {

namespace {

void fail(SuiteResult& r, const std::string& what) {
  ++r.failures;
  if (r.first_failure.empty()) r.first_failure = what;
}

double log_uniform(CounterRng& rng, double lo, double hi) {
  return std::exp(std::log(lo) + rng.uniform01() * (std::log(hi) - std::log(lo)));
}

}  // namespace

SuiteResult oracle_equivalence_suite(std::uint64_t seed, std::uint64_t instances,
                                     std::uint64_t max_n) {
  SuiteResult res;
  res.name = "oracle_equivalence";
  constexpr std::array rules{EdgeRule::geometric_only, EdgeRule::key_only,
                             EdgeRule::intersection};
  for (std::uint64_t i = 0; i < instances; ++i) {
    CounterRng rng(derive_seed(seed, StreamTag::selftest, i));
    const std::uint64_t n = 2 + rng.below(max_n - 1);
    const Boundary boundary = (i % 2 == 0) ? Boundary::square : Boundary::torus;
    const EdgeRule rule = rules[(i / 2) % rules.size()];
    const double radius = log_uniform(rng, 0.005, 1.5);
    const std::uint64_t k = 1 + rng.below(6);
    const std::uint64_t p = k + rng.below(8 * k + 10);
    const std::uint64_t instance_seed = rng();

    auto positions = sample_positions(n, instance_seed);
    std::vector<KeyRing> rings;
    if (rule != EdgeRule::geometric_only) {
      rings = sample_key_rings(n, {p, k}, instance_seed);
    }
    const auto fast = build_graph(positions, rings, radius, boundary, rule);
    const auto slow = build_graph_reference(positions, rings, radius, boundary, rule);
    ++res.cases;
    const std::string label = "instance " + std::to_string(i) + " (n=" + std::to_string(n) +
                              ", r=" + format_double(radius) + ", " +
                              std::string(to_string(boundary)) + ", " +
                              std::string(to_string(rule)) + ")";
    if (!(fast.topology() == slow.topology())) {
      fail(res, label + ": grid and all-pairs edge sets differ");
      continue;
    }
    if (components(fast.topology()) != components_oracle(fast.topology())) {
      fail(res, label + ": union-find and BFS labels differ");
    }
  }
  return res;
}

SuiteResult sandwich_suite(std::uint64_t seed, std::uint64_t draws) {
  SuiteResult res;
  res.name = "sandwich";
  for (std::uint64_t i = 0; i < draws; ++i) {
    CounterRng rng(derive_seed(seed, StreamTag::selftest, 0x5a4d0000ULL + i));
    const auto p = static_cast<std::uint64_t>(std::llround(log_uniform(rng, 4.0, 1e6)));
    const auto k_max = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(p)) / 2.0);
    const std::uint64_t k = 1 + rng.below(std::max<std::uint64_t>(k_max, 1));
    double x = rng.uniform01();
    while (x == 0.0) x = rng.uniform01();
    const auto n = static_cast<std::uint64_t>(std::llround(log_uniform(rng, 1.0, 1e6)));
    ++res.cases;
    const std::string label = "draw " + std::to_string(i) + " (P=" + std::to_string(p) +
                              ", K=" + std::to_string(k) + ", x=" + format_double(x) +
                              ", n=" + std::to_string(n) + ")";
    try {
      if (!exp_sandwich(x, n).strictly_ordered()) {
        fail(res, label + ": (1-x)^n sandwich violated");
      }
      if (!binomial_ratio_sandwich({p, k}, RatioMode::single).strictly_ordered()) {
        fail(res, label + ": single binomial-ratio sandwich violated");
      }
      if (!binomial_ratio_sandwich({p, k}, RatioMode::dual).strictly_ordered()) {
        fail(res, label + ": dual binomial-ratio sandwich violated");
      }
    } catch (const std::exception& e) {
      fail(res, label + ": " + e.what());
    }
  }
  return res;
}

SuiteResult binomial_suite() {
  SuiteResult res;
  res.name = "binomial";
  // Pascal's triangle is exact in 64 bits up to n = 62.
  std::vector<std::uint64_t> row{1};
  for (std::uint64_t n = 1; n <= 62; ++n) {
    std::vector<std::uint64_t> next(n + 1, 1);
    for (std::uint64_t k = 1; k < n; ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
    for (std::uint64_t k = 0; k <= n; ++k) {
      ++res.cases;
      const double exact = std::log(static_cast<double>(row[k]));
      const double got = log_binomial(n, k);
      if (std::fabs(got - exact) > 1e-13 * std::max(1.0, exact)) {
        fail(res, "log_binomial(" + std::to_string(n) + "," + std::to_string(k) + ")");
      }
    }
  }
  auto check = [&](bool ok, const std::string& what) {
    ++res.cases;
    if (!ok) fail(res, what);
  };
  check(std::fabs(link_probability({5, 2}).beta - 0.7) < 1e-15, "beta(5,2) = 0.7");
  check(link_probability({1000, 1}).beta == 1.0 / 1000.0, "beta(P,1) = 1/P");
  check(beta_ratio_gap({1000, 1}) == 0.0, "gap at K = 1");
  check(std::fabs(beta_ratio_gap({1000000, 100})) <= 0.02, "gap at (1e6, 100)");
  return res;
}

std::vector<SuiteResult> run_selftest(std::uint64_t seed, std::uint64_t instances,
                                      std::uint64_t draws) {
  return {oracle_equivalence_suite(seed, instances), sandwich_suite(seed, draws),
          binomial_suite()};
}

}  // namespace rkgrgg
