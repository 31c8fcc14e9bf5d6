#include "rkgrgg/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rkgrgg/error.hpp"

namespace rkgrgg {

namespace {

constexpr std::uint64_t kDirectSumLimit = 32;
constexpr std::uint64_t kLog1pSumLimit = std::uint64_t{1} << 22;

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// lgamma(n+1) - (n+1/2) ln n + n - ln(2 pi)/2, for n >= 16.
double stirling_error(double n) {
  constexpr double s0 = 1.0 / 12.0;
  constexpr double s1 = 1.0 / 360.0;
  constexpr double s2 = 1.0 / 1260.0;
  constexpr double s3 = 1.0 / 1680.0;
  constexpr double s4 = 1.0 / 1188.0;
  const double nn = n * n;
  return (s0 - (s1 - (s2 - (s3 - s4 / nn) / nn) / nn) / nn) / n;
}

double as_double(std::uint64_t v) { return static_cast<double>(v); }

void require_pool(const KeyPoolParams& pool, std::uint64_t multiple,
                  const char* what) {
  if (pool.ring_size == 0) {
    throw DomainError(std::string(what) + ": ring_size must be >= 1");
  }
  if (pool.pool_size < multiple * pool.ring_size) {
    throw DomainError(std::string(what) + ": pool_size must be >= " +
                      std::to_string(multiple) + " * ring_size");
  }
}

}  // namespace

double log_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    throw DomainError("log_binomial: k must not exceed n");
  }
  const std::uint64_t kk = std::min(k, n - k);
  if (kk == 0) return 0.0;
  if (kk < kDirectSumLimit) {
    CompensatedSum acc;
    for (std::uint64_t i = 1; i <= kk; ++i) {
      acc.add(std::log(as_double(n - kk + i) / as_double(i)));
    }
    return acc.value();
  }
  // Loader's saddle-point decomposition: every large term is positive, so no
  // cancellation between lgamma values of size n log n.
  const double nd = as_double(n);
  const double kd = as_double(kk);
  const double md = as_double(n - kk);
  const double main = kd * std::log(nd / kd) - md * std::log1p(-kd / nd);
  const double corr =
      stirling_error(nd) - stirling_error(kd) - stirling_error(md);
  const double log_norm = 0.5 * std::log(2.0 * std::numbers::pi * kd * (md / nd));
  return main + corr - log_norm;
}

double log_disjoint_ratio(std::uint64_t a, std::uint64_t k) {
  if (a < 2 * k) {
    throw DomainError("log_disjoint_ratio: requires a >= 2k");
  }
  if (k == 0) return 0.0;
  if (k <= kLog1pSumLimit) {
    const double kd = as_double(k);
    CompensatedSum acc;
    for (std::uint64_t i = 1; i <= k; ++i) {
      acc.add(std::log1p(-kd / as_double(a - k + i)));
    }
    return acc.value();
  }
  return log_binomial(a - k, k) - log_binomial(a, k);
}

LinkProbability link_probability(const KeyPoolParams& pool) {
  require_pool(pool, 2, "link_probability");
  const double p = as_double(pool.pool_size);
  const double k = as_double(pool.ring_size);
  LinkProbability out;
  if (pool.ring_size == 1) {
    out.beta = 1.0 / p;
    out.log_ratio = std::log1p(-1.0 / p);
    out.ratio = 1.0 - out.beta;
  } else {
    out.log_ratio = log_disjoint_ratio(pool.pool_size, pool.ring_size);
    out.beta = -std::expm1(out.log_ratio);
    out.ratio = std::exp(out.log_ratio);
  }
  out.ratio_lower = std::exp(-k * k / (p - 2.0 * k + 1.0));
  out.ratio_upper = std::exp(-k * k / p);
  return out;
}

double double_link_probability(const KeyPoolParams& pool) {
  require_pool(pool, 3, "double_link_probability");
  if (pool.ring_size == 1) {
    return 2.0 / as_double(pool.pool_size);
  }
  const double lr = log_disjoint_ratio(pool.pool_size, pool.ring_size) +
                    log_disjoint_ratio(pool.pool_size - pool.ring_size,
                                       pool.ring_size);
  return -std::expm1(lr);
}

LinkProbabilities link_probabilities(const KeyPoolParams& pool) {
  LinkProbabilities out;
  out.beta = link_probability(pool).beta;
  out.beta_tilde = double_link_probability(pool);
  out.ratio_gap = out.beta_tilde / out.beta - 1.0;
  return out;
}

double beta_ratio_gap(const KeyPoolParams& pool) {
  const LinkProbabilities lp = link_probabilities(pool);
  return lp.beta_tilde / lp.beta - 2.0;
}

double default_gap_tolerance(const KeyPoolParams& pool) {
  const double k = as_double(pool.ring_size);
  return 3.0 * k * k / as_double(pool.pool_size);
}

GapBounds beta_ratio_gap_bounds(const KeyPoolParams& pool) {
  require_pool(pool, 3, "beta_ratio_gap_bounds");
  const double p = as_double(pool.pool_size);
  const double k = as_double(pool.ring_size);
  const double k2 = k * k;
  GapBounds out;
  out.lower = -std::expm1(-k2 / (p - k)) / std::expm1(k2 / (p - 2.0 * k + 1.0));
  out.upper = -std::expm1(-k2 / (p - 3.0 * k + 1.0)) / std::expm1(k2 / p);
  return out;
}

Sandwich exp_sandwich(double x, std::uint64_t n) {
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError("exp_sandwich: x must lie in (0,1)");
  }
  if (n == 0) {
    throw DomainError("exp_sandwich: n must be a positive integer");
  }
  const double nd = as_double(n);
  Sandwich s;
  s.log_lower = -nd * x / (1.0 - x);
  s.log_value = nd * std::log1p(-x);
  s.log_upper = -nd * x;
  s.lower = std::exp(s.log_lower);
  s.value = std::exp(s.log_value);
  s.upper = std::exp(s.log_upper);
  return s;
}

Sandwich binomial_ratio_sandwich(const KeyPoolParams& pool, RatioMode mode) {
  const double p = as_double(pool.pool_size);
  const double k = as_double(pool.ring_size);
  Sandwich s;
  if (mode == RatioMode::single) {
    require_pool(pool, 2, "binomial_ratio_sandwich(single)");
    s.log_lower = -k * k / (p - 2.0 * k + 1.0);
    s.log_value = log_disjoint_ratio(pool.pool_size, pool.ring_size);
    s.log_upper = -k * k / p;
  } else {
    require_pool(pool, 3, "binomial_ratio_sandwich(dual)");
    s.log_lower = -k * k / (p - 3.0 * k + 1.0);
    s.log_value =
        log_disjoint_ratio(pool.pool_size - pool.ring_size, pool.ring_size);
    s.log_upper = -k * k / (p - k);
  }
  s.lower = std::exp(s.log_lower);
  s.value = std::exp(s.log_value);
  s.upper = std::exp(s.log_upper);
  return s;
}

double log_joint_isolation_key_term(const KeyPoolParams& pool, std::uint64_t x,
                                    std::uint64_t n3) {
  require_pool(pool, 2, "joint_isolation_key_term");
  const std::uint64_t p = pool.pool_size;
  const std::uint64_t k = pool.ring_size;
  if (x > k) {
    throw DomainError("joint_isolation_key_term: x must lie in [0, K]");
  }
  if (n3 > 0 && p - 2 * k + x < k) {
    return -std::numeric_limits<double>::infinity();
  }
  const double nd3 = as_double(n3);
  double lp = log_binomial(p, x) + log_binomial(p - x, k - x) +
              log_binomial(p - k, k - x);
  if (n3 > 0) {
    lp += nd3 * log_binomial(p - 2 * k + x, k);
  }
  lp -= (2.0 + nd3) * log_binomial(p, k);
  return lp;
}

double joint_isolation_key_term(const KeyPoolParams& pool, std::uint64_t x,
                                std::uint64_t n3) {
  return std::exp(log_joint_isolation_key_term(pool, x, n3));
}

double joint_isolation_key_ratio(const KeyPoolParams& pool, std::uint64_t x,
                                 std::uint64_t n3) {
  require_pool(pool, 2, "joint_isolation_key_ratio");
  const double p = as_double(pool.pool_size);
  const double k = as_double(pool.ring_size);
  if (x >= pool.ring_size) {
    throw DomainError("joint_isolation_key_ratio: x must lie in [0, K)");
  }
  const double xd = as_double(x);
  const double head = (xd + 1.0) * (p - 2.0 * k + xd + 1.0) /
                      ((k - xd) * (k - xd));
  if (n3 == 0) return head;
  const double num = p - 3.0 * k + xd + 1.0;
  const double den = p - 2.0 * k + xd + 1.0;
  if (num < 0.0) return std::numeric_limits<double>::quiet_NaN();
  return head * std::pow(num / den, as_double(n3));
}

}  // namespace rkgrgg
