#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <numbers>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "rkgrgg/combinatorics.hpp"
#include "rkgrgg/error.hpp"
#include "rkgrgg/random.hpp"

using namespace rkgrgg;
using Big = boost::multiprecision::cpp_dec_float_50;

namespace {

// ln C(n,k) as a 50-digit product of the k factors (n-i)/(i+1).
Big big_log_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n - k) k = n - k;
  Big acc = 0;
  for (std::uint64_t i = 0; i < k; ++i) {
    acc += log(Big(n - i) / Big(i + 1));
  }
  return acc;
}

// C(a-k,k)/C(a,k) = prod_{i<k} (a-k-i)/(a-i).
Big big_disjoint_ratio(std::uint64_t a, std::uint64_t k) {
  Big r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r *= Big(a - k - i) / Big(a - i);
  return r;
}

double rel_err(double got, const Big& want) {
  return static_cast<double>(abs((Big(got) - want) / want));
}

}  // namespace

TEST_SUITE("combinatorics") {

TEST_CASE("log_binomial examples") {
  CHECK(log_binomial(4, 2) == doctest::Approx(std::log(6.0)).epsilon(1e-14));
  CHECK(log_binomial(4, 2) == doctest::Approx(1.791759).epsilon(1e-6));
  CHECK(log_binomial(17, 0) == 0.0);
  CHECK(log_binomial(10, 5) == doctest::Approx(std::log(252.0)).epsilon(1e-14));
  CHECK_THROWS_AS(log_binomial(3, 4), DomainError);
}

TEST_CASE("log_binomial against a 50-digit oracle") {
  const std::uint64_t ns[] = {5, 63, 1000, 65536, 1000000, 123456789, 1000000000};
  const std::uint64_t ks[] = {1, 2, 3, 7, 31, 100, 1000};
  for (auto n : ns) {
    for (auto k : ks) {
      if (k >= n) continue;
      CAPTURE(n);
      CAPTURE(k);
      CHECK(rel_err(log_binomial(n, k), big_log_binomial(n, k)) <= 1e-12);
      CHECK(rel_err(log_binomial(n, n - k), big_log_binomial(n, k)) <= 1e-12);
    }
  }
}

TEST_CASE("link_probability examples") {
  CHECK(link_probability({5, 2}).beta == doctest::Approx(0.7).epsilon(1e-15));
  for (std::uint64_t p : {2ULL, 3ULL, 10ULL, 997ULL, 1000000000ULL}) {
    CHECK(link_probability({p, 1}).beta == doctest::Approx(1.0 / p).epsilon(1e-15));
  }
  const auto lp = link_probability({10000, 10});
  CHECK(lp.ratio_lower <= lp.ratio);
  CHECK(lp.ratio <= lp.ratio_upper);
  CHECK(lp.beta >= 1.0 - lp.ratio_upper);
  CHECK(lp.beta <= 1.0 - lp.ratio_lower);
  CHECK_THROWS_AS(link_probability({5, 3}), DomainError);
  CHECK_THROWS_AS(link_probability({5, 0}), DomainError);
}

TEST_CASE("beta against a 50-digit oracle") {
  const std::uint64_t pools[] = {10, 100, 4096, 65536, 1000000, 1000000000};
  const std::uint64_t rings[] = {1, 2, 3, 5, 10, 40, 200};
  for (auto p : pools) {
    for (auto k : rings) {
      if (2 * k > p) continue;
      CAPTURE(p);
      CAPTURE(k);
      const Big want = 1 - big_disjoint_ratio(p, k);
      CHECK(rel_err(link_probability({p, k}).beta, want) <= 1e-12);
      if (3 * k <= p) {
        const Big want_tilde = 1 - big_disjoint_ratio(p, k) * big_disjoint_ratio(p - k, k);
        CHECK(rel_err(double_link_probability({p, k}), want_tilde) <= 1e-12);
      }
    }
  }
}

TEST_CASE("beta agrees with the lgamma difference where that reference is accurate") {
  // 1 - exp(lgamma difference) carries absolute error ~1e-16 * |log ratio|
  // terms, so the comparison is meaningful only when beta is not tiny.
  for (std::uint64_t p : {20ULL, 100ULL, 1000ULL, 5000ULL}) {
    for (std::uint64_t k : {2ULL, 5ULL, 9ULL}) {
      if (2 * k > p) continue;
      const double ref = 1.0 - std::exp(log_binomial(p - k, k) - log_binomial(p, k));
      if (ref < 1e-2) continue;
      CHECK(link_probability({p, k}).beta == doctest::Approx(ref).epsilon(1e-10));
    }
  }
}

TEST_CASE("double_link_probability examples") {
  CHECK(double_link_probability({6, 2}) == doctest::Approx(14.0 / 15.0).epsilon(1e-15));
  CHECK(double_link_probability({100, 1}) == doctest::Approx(0.02).epsilon(1e-15));
  const auto lp = link_probabilities({1000000, 100});
  CHECK(lp.beta_tilde >= lp.beta);
  CHECK(lp.beta_tilde <= 2.0 * lp.beta * 1.02);
  CHECK(lp.ratio_gap == doctest::Approx(lp.beta_tilde / lp.beta - 1.0));
  CHECK_THROWS_AS(double_link_probability({8, 3}), DomainError);
}

TEST_CASE("beta_ratio_gap examples") {
  for (std::uint64_t p = 3; p < 200; ++p) CHECK(beta_ratio_gap({p, 1}) == 0.0);
  CHECK(std::fabs(beta_ratio_gap({1000000, 100})) <= 0.02);
  const auto bounds = beta_ratio_gap_bounds({10000, 50});
  const double gap1 = beta_ratio_gap({10000, 50}) + 1.0;  // beta_tilde/beta - 1
  CHECK(bounds.lower <= gap1);
  CHECK(gap1 <= bounds.upper);
  CHECK(std::fabs(beta_ratio_gap({10000, 50})) <= default_gap_tolerance({10000, 50}));
  CHECK_THROWS_AS(beta_ratio_gap({5, 2}), DomainError);
}

TEST_CASE("beta_ratio_gap shrinks as K^2/P -> 0") {
  double prev = 1e9;
  for (std::uint64_t p : {1000ULL, 10000ULL, 100000ULL, 1000000ULL}) {
    const double g = std::fabs(beta_ratio_gap({p, 10}));
    CHECK(g < prev);
    prev = g;
  }
}

TEST_CASE("exp_sandwich examples") {
  const auto a = exp_sandwich(0.5, 1);
  CHECK(a.lower == doctest::Approx(std::exp(-1.0)));
  CHECK(a.value == doctest::Approx(0.5));
  CHECK(a.upper == doctest::Approx(std::exp(-0.5)));
  CHECK(a.strictly_ordered());
  const auto b = exp_sandwich(1e-12, 1);
  CHECK(b.lower == doctest::Approx(1.0));
  CHECK(b.value == doctest::Approx(1.0));
  CHECK(b.upper == doctest::Approx(1.0));
  CHECK(b.strictly_ordered());
  const auto c = exp_sandwich(0.1, 100);
  CHECK(c.lower == doctest::Approx(std::exp(-100.0 / 9.0)));
  CHECK(c.value == doctest::Approx(std::pow(0.9, 100)));
  CHECK(c.upper == doctest::Approx(std::exp(-10.0)));
  CHECK(c.strictly_ordered());
  CHECK_THROWS_AS(exp_sandwich(0.0, 3), DomainError);
  CHECK_THROWS_AS(exp_sandwich(1.0, 3), DomainError);
}

TEST_CASE("binomial_ratio_sandwich examples") {
  const auto s = binomial_ratio_sandwich({20, 2}, RatioMode::single);
  CHECK(s.value == doctest::Approx(153.0 / 190.0).epsilon(1e-14));
  CHECK(s.ordered());
  const auto t = binomial_ratio_sandwich({100, 1}, RatioMode::single);
  CHECK(t.value == doctest::Approx(0.99).epsilon(1e-14));
  CHECK(t.lower == doctest::Approx(std::exp(-1.0 / 99.0)));
  CHECK(t.upper == doctest::Approx(std::exp(-1.0 / 100.0)));
  CHECK(binomial_ratio_sandwich({30, 3}, RatioMode::dual).ordered());
  CHECK_THROWS_AS(binomial_ratio_sandwich({8, 3}, RatioMode::dual), DomainError);
  CHECK_THROWS_AS(binomial_ratio_sandwich({5, 3}, RatioMode::single), DomainError);
}

TEST_CASE("sandwiches hold strictly on random draws") {
  CounterRng rng(derive_seed(99, StreamTag::selftest, 1));
  for (int i = 0; i < 2000; ++i) {
    const auto p = 4 + rng.below(1000000 - 3);
    const auto kmax = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::sqrt(double(p)) / 2));
    const auto k = 1 + rng.below(kmax);
    double x = rng.uniform01();
    if (x == 0.0) continue;
    const auto n = 1 + rng.below(1000000);
    CAPTURE(p);
    CAPTURE(k);
    CHECK(exp_sandwich(x, n).strictly_ordered());
    CHECK(binomial_ratio_sandwich({p, k}, RatioMode::single).strictly_ordered());
    CHECK(binomial_ratio_sandwich({p, k}, RatioMode::dual).strictly_ordered());
  }
}

TEST_CASE("joint_isolation_key_term examples") {
  for (std::uint64_t p : {6ULL, 20ULL, 1000ULL}) {
    const KeyPoolParams pool{p, 2};
    CHECK(joint_isolation_key_term(pool, 0, 0) ==
          doctest::Approx(1.0 - link_probability(pool).beta).epsilon(1e-13));
  }
  CHECK(joint_isolation_key_term({6, 2}, 2, 0) == doctest::Approx(1.0 / 15.0).epsilon(1e-14));
  // The third ring must avoid 2K - x keys; with x = 0 and P < 3K it cannot.
  CHECK(joint_isolation_key_term({8, 3}, 0, 1) == 0.0);
  CHECK(joint_isolation_key_term({5, 2}, 0, 4) == 0.0);
  // x = K at P = 3K leaves P - K = 2K keys for each third ring.
  const double want = (1.0 / 84.0) * std::pow(20.0 / 84.0, 2);
  CHECK(joint_isolation_key_term({9, 3}, 3, 2) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("shared-key counts form a distribution") {
  for (std::uint64_t p : {6ULL, 13ULL, 100ULL, 5000ULL}) {
    for (std::uint64_t k : {1ULL, 2ULL, 3ULL}) {
      if (2 * k > p) continue;
      double total = 0.0;
      for (std::uint64_t x = 0; x <= k; ++x) total += joint_isolation_key_term({p, k}, x, 0);
      CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("joint_isolation_key_ratio matches the quotient of terms") {
  const KeyPoolParams pool{40, 4};
  for (std::uint64_t n3 : {0ULL, 1ULL, 5ULL}) {
    for (std::uint64_t x = 0; x < 4; ++x) {
      const double direct =
          joint_isolation_key_term(pool, x, n3) / joint_isolation_key_term(pool, x + 1, n3);
      CHECK(joint_isolation_key_ratio(pool, x, n3) == doctest::Approx(direct).epsilon(1e-10));
    }
  }
}

TEST_CASE("beta is monotone in K and P") {
  for (std::uint64_t p : {50ULL, 1000ULL, 100000ULL}) {
    double prev = 0.0;
    for (std::uint64_t k = 1; 2 * k <= p && k <= 20; ++k) {
      const double b = link_probability({p, k}).beta;
      CHECK(b > prev);
      prev = b;
    }
  }
  for (std::uint64_t k : {1ULL, 3ULL, 8ULL}) {
    double prev = 2.0;
    for (std::uint64_t p = 2 * k; p < 2 * k + 200; ++p) {
      const double b = link_probability({p, k}).beta;
      CHECK(b < prev);
      prev = b;
    }
  }
}

}  // TEST_SUITE
