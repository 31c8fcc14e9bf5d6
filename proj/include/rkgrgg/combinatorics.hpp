#pragma once

// Closed-form key-overlap probabilities for random key rings, evaluated in
// the log domain so pool sizes up to 1e9 stay finite.

#include <cstdint>

namespace rkgrgg {

struct KeyPoolParams {
  std::uint64_t pool_size = 0;  // P
  std::uint64_t ring_size = 0;  // K

  /// ring_size >= 1 and pool_size >= 2 * ring_size.
  [[nodiscard]] bool is_valid() const noexcept {
    return ring_size >= 1 && pool_size >= 2 * ring_size;
  }
};

/// Probability that two rings intersect plus the exponential sandwich on
/// the complementary ratio C(P-K,K)/C(P,K).
struct LinkProbability {
  double beta = 0.0;
  double ratio = 0.0;        // C(P-K,K)/C(P,K) = 1 - beta
  double log_ratio = 0.0;
  double ratio_lower = 0.0;  // exp(-K^2/(P-2K+1))
  double ratio_upper = 0.0;  // exp(-K^2/P)
};

struct LinkProbabilities {
  double beta = 0.0;
  double beta_tilde = 0.0;
  double ratio_gap = 0.0;  // beta_tilde/beta - 1
};

struct Sandwich {
  double lower = 0.0;
  double value = 0.0;
  double upper = 0.0;
  double log_lower = 0.0;
  double log_value = 0.0;
  double log_upper = 0.0;

  [[nodiscard]] bool strictly_ordered() const noexcept {
    return log_lower < log_value && log_value < log_upper;
  }
  [[nodiscard]] bool ordered() const noexcept {
    return log_lower <= log_value && log_value <= log_upper;
  }
};

enum class RatioMode { single, dual };

struct GapBounds {
  double lower = 0.0;  // lower bound on beta_tilde/beta - 1
  double upper = 0.0;  // upper bound on beta_tilde/beta - 1
};

/// ln C(n, k). Throws DomainError when k > n.
double log_binomial(std::uint64_t n, std::uint64_t k);

/// ln[C(a - k, k) / C(a, k)] computed as a sum of log1p terms when k is
/// moderate; requires a >= 2k.
double log_disjoint_ratio(std::uint64_t a, std::uint64_t k);

/// beta = 1 - C(P-K,K)/C(P,K). Throws DomainError when P < 2K or K == 0.
LinkProbability link_probability(const KeyPoolParams& pool);

/// beta_tilde = 1 - C(P-2K,K)/C(P,K). Throws DomainError when P < 3K.
double double_link_probability(const KeyPoolParams& pool);

LinkProbabilities link_probabilities(const KeyPoolParams& pool);

/// beta_tilde/beta - 2. Exactly zero for K == 1.
double beta_ratio_gap(const KeyPoolParams& pool);

/// Default tolerance for |beta_tilde/beta - 2|: 3 K^2 / P.
double default_gap_tolerance(const KeyPoolParams& pool);

/// Bounds on beta_tilde/beta - 1 obtained from the two binomial-ratio
/// sandwiches (requires P >= 3K).
GapBounds beta_ratio_gap_bounds(const KeyPoolParams& pool);

/// (exp(-nx/(1-x)), (1-x)^n, exp(-nx)) for x in (0,1).
Sandwich exp_sandwich(double x, std::uint64_t n);

/// single: (exp(-K^2/(P-2K+1)), C(P-K,K)/C(P,K), exp(-K^2/P))
/// dual:   (exp(-K^2/(P-3K+1)), C(P-2K,K)/C(P-K,K), exp(-K^2/(P-K)))
Sandwich binomial_ratio_sandwich(const KeyPoolParams& pool, RatioMode mode);

/// P_x: probability that rings 1 and 2 share exactly x keys while n3 further
/// rings avoid both. Returns 0 when the third-ring draw is infeasible.
double joint_isolation_key_term(const KeyPoolParams& pool, std::uint64_t x,
                                std::uint64_t n3);
double log_joint_isolation_key_term(const KeyPoolParams& pool, std::uint64_t x,
                                    std::uint64_t n3);

/// Closed form of P_x / P_{x+1} for 0 <= x < K.
double joint_isolation_key_ratio(const KeyPoolParams& pool, std::uint64_t x,
                                 std::uint64_t n3);

}  // namespace rkgrgg
