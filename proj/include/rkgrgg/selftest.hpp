#pragma once

// Built-in property suites: independent oracles for graph construction and
// components, and the probability sandwiches on random parameter draws.

#include <cstdint>
#include <string>
#include <vector>

namespace rkgrgg {

struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  [[nodiscard]] bool passed() const noexcept { return cases > 0 && failures == 0; }
};

/// Grid construction vs all-pairs construction, and union-find vs BFS
/// labels, on random instances with n <= max_n over both boundaries and
/// all edge rules.
SuiteResult oracle_equivalence_suite(std::uint64_t seed, std::uint64_t instances,
                                     std::uint64_t max_n = 256);

/// (1-x)^n and both binomial-ratio sandwiches must hold strictly on random
/// draws with P <= 1e6, 1 <= K <= sqrt(P)/2, x in (0,1).
SuiteResult sandwich_suite(std::uint64_t seed, std::uint64_t draws);

/// log_binomial against exact integer binomials, and the closed-form
/// link probabilities on hand-checkable pools.
SuiteResult binomial_suite();

std::vector<SuiteResult> run_selftest(std::uint64_t seed, std::uint64_t instances,
                                      std::uint64_t draws);

}  // namespace rkgrgg
