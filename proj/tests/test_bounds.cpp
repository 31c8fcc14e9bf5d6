#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "rkgrgg/bounds.hpp"
#include "rkgrgg/error.hpp"
#include "rkgrgg/random.hpp"

using namespace rkgrgg;
using std::numbers::pi;

namespace {

// P{two given nodes of an N-node cell form an isolated component of size 2}
// under E2 alone, by enumerating ring pairs and the K-subsets a third ring
// may take.
double enumerate_pair_component(std::uint64_t p, std::uint64_t k, std::uint64_t n) {
  std::vector<unsigned> rings;
  for (unsigned m = 0; m < (1u << p); ++m)
    if (static_cast<std::uint64_t>(__builtin_popcount(m)) == k) rings.push_back(m);
  const double total = static_cast<double>(rings.size());
  double sum = 0.0;
  for (auto a : rings) {
    for (auto b : rings) {
      if (!(a & b)) continue;
      double avoid = 0.0;
      for (auto c : rings) avoid += !(c & (a | b));
      sum += std::pow(avoid / total, static_cast<double>(n - 2));
    }
  }
  return sum / (total * total);
}

double ln_choose(double n, double k) {
  return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("single_isolation_probability examples") {
  CHECK(single_isolation_probability(2, 0.1, 0.5).value == doctest::Approx(0.95));
  const double ab = (std::log(1000.0) + 1.0) / 1000.0;
  CHECK(ab == doctest::Approx(7.9078e-3).epsilon(1e-4));
  const auto r = single_isolation_probability(1000, ab, 1.0);
  CHECK(r.value == doctest::Approx(std::pow(1.0 - ab, 999)));
  CHECK(r.sandwich.strictly_ordered());
  CHECK(r.sandwich.lower < r.value);
  CHECK(r.value < r.sandwich.upper);
  CHECK(std::log(r.value) == doctest::Approx(-7.93).epsilon(2e-3));
  CHECK_THROWS_AS(single_isolation_probability(10, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(single_isolation_probability(10, 0.0, 0.5), DomainError);
  CHECK_THROWS_AS(single_isolation_probability(1, 0.1, 0.5), DomainError);
}

TEST_CASE("single isolation stays inside its sandwich") {
  CounterRng rng(31);
  for (int i = 0; i < 1000; ++i) {
    const double a = 0.001 + 0.9 * rng.uniform01();
    const double b = 0.001 + 0.998 * rng.uniform01();
    const auto n = 2 + rng.below(100000);
    CHECK(single_isolation_probability(n, a, b).sandwich.strictly_ordered());
  }
}

TEST_CASE("isolation_count_lower_bound") {
  const double c1 = 1.0;
  const std::uint64_t n = 1000;
  const double l = std::log(1000.0) + c1;
  const auto b = isolation_count_lower_bound(n, c1);
  CHECK(b.value == doctest::Approx(std::exp(-c1) * std::exp(-l * l / (n - l))));
  CHECK(b.regime_ok);
  // n P{Z_1} >= this bound at a beta = (log n + c1)/n.
  const double exact = n * single_isolation_probability(n, l / n, 1.0).value;
  CHECK(exact >= b.value);
  CHECK_FALSE(isolation_count_lower_bound(n, -1.0).regime_ok);
}

TEST_CASE("separation cases and geometry") {
  CHECK(classify_separation(0.5, 0.2) == SeparationCase::far);
  CHECK(classify_separation(0.4, 0.2) == SeparationCase::mid);
  CHECK(classify_separation(0.2, 0.2) == SeparationCase::mid);
  CHECK(classify_separation(0.1, 0.2) == SeparationCase::near);
  CHECK(lens_area(0.0, 0.1) == doctest::Approx(pi * 0.01));
  CHECK(lens_area(0.2, 0.1) == 0.0);
  CHECK(lens_area(0.5, 0.1) == 0.0);
  // Lens of unit-distance unit circles: 2pi/3 - sqrt(3)/2.
  CHECK(lens_area(1.0, 1.0) == doctest::Approx(2.0 * pi / 3.0 - std::sqrt(3.0) / 2.0));

  for (double d : {0.05, 0.15, 0.25, 0.3}) {
    const auto g = isolation_geometry({0.5, 0.5}, {0.5 + d, 0.5}, 0.1, Boundary::torus);
    CHECK(g.areas[0] == g.areas[1]);
    for (double a : g.areas) CHECK(a >= 0.0);
    CHECK(g.areas[0] + g.areas[1] + g.areas[2] + g.areas[3] == doctest::Approx(1.0));
    if (g.kind == SeparationCase::far) CHECK(g.areas[2] == 0.0);
  }
  std::vector<Point> others{{0.5, 0.5}, {0.58, 0.5}, {0.9, 0.9}, {0.66, 0.5}};
  const auto g = isolation_geometry({0.5, 0.5}, {0.65, 0.5}, 0.1, Boundary::torus, others);
  CHECK(g.kind == SeparationCase::mid);
  CHECK(g.counts[0] == 1);
  CHECK(g.counts[1] == 1);
  CHECK(g.counts[2] == 1);
  CHECK(g.counts[3] == 1);
}

TEST_CASE("joint_isolation_bound examples") {
  CHECK(joint_isolation_bound(2, 0.1, 0.3, 0.5, SeparationCase::far).value == 1.0);
  const double beta = 1.0 / 50.0;
  const auto k1 = joint_isolation_bound(100, 0.05, beta, 2.0 * beta, SeparationCase::mid);
  CHECK(k1.gamma == 0.0);
  CHECK(k1.value == doctest::Approx(std::exp(-98.0 * 2.0 * 0.05 * beta)));
  const auto far = joint_isolation_bound(100, 0.05, beta, 2.0 * beta, SeparationCase::far);
  CHECK(far.value == doctest::Approx(std::pow(1.0 - 2.0 * 0.05 * beta, 98)));
  const auto lp = link_probabilities({1000, 5});
  const auto near = joint_isolation_bound(500, 0.02, lp.beta, lp.beta_tilde, SeparationCase::near);
  CHECK(near.gamma == doctest::Approx(std::fabs(lp.beta_tilde / lp.beta - 2.0)));
  CHECK(near.value == doctest::Approx(std::exp(-498.0 * (2.0 - near.gamma) * 0.02 * lp.beta)));
  CHECK_THROWS_AS(joint_isolation_bound(1, 0.1, 0.3, 0.5, SeparationCase::far), DomainError);
}

TEST_CASE("disconnect_lower_bound examples") {
  const auto b = disconnect_lower_bound(1.0, 1000000, default_epsilon(std::pow(std::log(1e6), 1.5), 1000000));
  CHECK(b.floor == doctest::Approx(std::exp(-1.0) / 4.0));
  CHECK(b.floor == doctest::Approx(0.0919699).epsilon(1e-6));
  CHECK(b.finite_n >= b.floor - 0.01);
  CHECK(b.regime_ok);
  CHECK(disconnect_lower_bound(50.0, 1000, 0.3).floor < 1e-22);
  CHECK_FALSE(disconnect_lower_bound(-1.0, 1000, 0.3).regime_ok);

  const double n = 5000, c1 = 0.7, eps = 0.3, l = std::log(n) + c1;
  const double want = std::exp(-c1) * (std::exp(-l * l / (n - l)) -
                                       std::exp(-c1 + 4.0 * l / n) / 2.0 -
                                       std::exp(2.0 * c1) / std::pow(n, eps));
  CHECK(disconnect_lower_bound(c1, 5000, eps).finite_n == doctest::Approx(want));
  CHECK(default_epsilon(100.0, 10000) == doctest::Approx((1.0 - std::log(100.0) / std::log(10000.0)) / 2.0));
}

TEST_CASE("disconnect floor decreases in c1") {
  CounterRng rng(1);
  for (int i = 0; i < 200; ++i) {
    const double a = 0.01 + 5 * rng.uniform01();
    const double b = a + 0.01 + rng.uniform01();
    CHECK(disconnect_lower_bound(a, 1000, 0.3).floor > disconnect_lower_bound(b, 1000, 0.3).floor);
  }
}

TEST_CASE("denseness_bound examples") {
  const auto b = denseness_bound(10000, 0.1, 0.5);
  CHECK(b.per_cell == doctest::Approx(2.0 * std::exp(-6.25)));
  CHECK(b.per_cell == doctest::Approx(3.86e-3).epsilon(1e-3));
  CHECK(b.union_bound == doctest::Approx(100.0 * b.per_cell));
  CHECK(denseness_bound(1e9, 0.1, 0.999).per_cell < 1e-300);
  CHECK_THROWS_AS(denseness_bound(100, 0.1, 1.0), DomainError);
  CHECK_THROWS_AS(denseness_bound(100, 0.1, 0.0), DomainError);
  CHECK_THROWS_AS(denseness_bound(100, 0.0, 0.5), DomainError);
}

TEST_CASE("denseness_bound decreases in n s^2 delta^2") {
  CounterRng rng(2);
  for (int i = 0; i < 200; ++i) {
    const double n = 10 + 1e5 * rng.uniform01();
    const double s = 0.01 + 0.5 * rng.uniform01();
    const double d = 0.05 + 0.9 * rng.uniform01();
    const double base = denseness_bound(n, s, d).log_per_cell;
    CHECK(denseness_bound(n * 1.5, s, d).log_per_cell < base);
    CHECK(denseness_bound(n, s, std::min(d * 1.05, 0.999)).log_per_cell < base);
  }
}

TEST_CASE("component_bound examples") {
  const KeyPoolParams pool{100, 5};
  const double beta = link_probability(pool).beta;
  const std::uint64_t n = 40;
  const auto c = component_bound(n, 1, 5, pool, beta);
  const double t1 = std::exp(ln_choose(100, 5) + 5.0 * std::log(0.05) - 39.0 * 25.0 / 100.0);
  const double t2 = std::exp(-39.0 * 5.0 * 6.0 / 100.0);
  CHECK(c.value == doctest::Approx(t1 + t2));
  CHECK(c.log_connected_term == doctest::Approx(std::log(t2)));
  // A single node isolated inside the cell: (1 - beta)^(N-1) <= bound.
  CHECK(std::pow(1.0 - beta, 39.0) <= c.value);

  const auto z = component_bound(n, 3, 8, pool, 0.0);
  CHECK(std::isinf(z.log_connected_term));
  CHECK(z.log_connected_term < 0.0);
  CHECK(z.value == doctest::Approx(std::exp(z.log_key_term)));

  CHECK_THROWS_AS(component_bound(n, 2, 4, pool, beta), DomainError);
  CHECK_THROWS_AS(component_bound(n, 2, 11, pool, beta), DomainError);
  CHECK_THROWS_AS(component_bound(n, 21, 10, pool, beta), DomainError);
  CHECK_THROWS_AS(component_bound(n, 0, 5, pool, beta), DomainError);
}

TEST_CASE("component_bound dominates enumerated pair components") {
  const std::uint64_t n = 20;
  const KeyPoolParams pools[] = {{6, 2}, {7, 1}, {8, 2}, {9, 3}, {10, 2}, {12, 3}, {14, 2}};
  for (const auto& pool : pools) {
    const double exact = enumerate_pair_component(pool.pool_size, pool.ring_size, n);
    const double beta = link_probability(pool).beta;
    for (std::uint64_t x = pool.ring_size; x <= std::min(2 * pool.ring_size, pool.pool_size); ++x) {
      CAPTURE(pool.pool_size);
      CAPTURE(pool.ring_size);
      CAPTURE(x);
      CHECK(component_bound(n, 2, x, pool, beta).value >= exact);
    }
  }
}

TEST_CASE("cell_isolation_bound examples") {
  const double delta = 0.5;
  const auto half = cell_isolation_bound(4.0 * pi / (1.0 - delta), delta, 10000);
  CHECK(half.value == doctest::Approx(0.01));
  CHECK(half.regime_ok);
  const auto edge = cell_isolation_bound(2.0 * pi / (1.0 - delta), delta, 10000);
  CHECK(edge.value == doctest::Approx(1.0));
  CHECK_FALSE(edge.regime_ok);
  const auto v = cell_isolation_bound(20.0, 0.5, 10000);
  CHECK(v.value == doctest::Approx(std::pow(1e4, -(20.0 * 0.5 / (2.0 * pi) - 1.0) / 2.0)));
}

TEST_CASE("sufficiency constants example") {
  SufficiencyConstants c;
  c.mu = 0.4;
  c.delta = 0.5;
  c.sigma = 10.0;
  c.lambda = 0.4;
  c.R = 8;
  c.alpha = 20.0;
  c.epsilon = 0.5;
  const KeyPoolParams pool{65536, 64};
  const auto rep = sufficiency_constants_check(c, pool, 1000);
  auto find = [&](const std::string& prefix) -> const ConstraintCheck& {
    for (const auto& ch : rep.checks)
      if (ch.name.rfind(prefix, 0) == 0) return ch;
    FAIL("missing check " << prefix);
    return rep.checks.front();
  };
  const double sigma_min = 1.5 * std::log(2.0) / std::log(std::exp(0.4) / std::pow(0.4, 1.4));
  CHECK(find("sigma >=").rhs == doctest::Approx(sigma_min));
  CHECK(find("sigma >=").pass == (10.0 >= sigma_min));
  CHECK(find("K > 2 log2").rhs == doctest::Approx(2.0 * std::log(2.0) / 0.4));
  CHECK(find("K > 2 log2").pass);
  CHECK(find("lambda R").lhs == doctest::Approx(3.2));
  CHECK(find("lambda R").rhs == doctest::Approx(20.0 * 0.5 / (2.0 * pi)));
  CHECK(find("lambda R").pass);
  const double small = std::exp(2.0 + 4096.0 / 65536.0) * 1.5 / (std::pow(2.0, 62) * 10.0);
  CHECK(find("e^(2+K^2/P)").lhs == doctest::Approx(small));
  const double geo = std::exp(64.0 / 65536.0) * std::pow(std::exp(2.0) * 1.5 / 10.0, 0.4) *
                     std::pow(0.4, 1.0 - 0.8);
  CHECK(find("e^(K/P)").lhs == doctest::Approx(geo));
  const double gamma = std::exp(1.5 / 0.5) * 1.5;
  CHECK(rep.gamma_eps == doctest::Approx(gamma));
  CHECK(find("Gamma(eps)").lhs == doctest::Approx(gamma * 4096.0 / 65536.0));
  CHECK(find("Gamma(eps)").pass == (gamma * 4096.0 / 65536.0 < 1.0));
  REQUIRE(rep.l1);
  CHECK(*rep.l1 == 500);
  CHECK(find("alpha >").pass);
}

TEST_CASE("sufficiency constants limits") {
  SufficiencyConstants c;
  c.mu = 1e-6;
  auto rep = sufficiency_constants_check(c, {65536, 64});
  for (const auto& ch : rep.checks)
    if (ch.name.rfind("K > 2 log2", 0) == 0) CHECK_FALSE(ch.pass);

  c.mu = 0.4;
  c.lambda = 0.49;
  c.sigma = 1e9;
  rep = sufficiency_constants_check(c, {65536, 64});
  for (const auto& ch : rep.checks)
    if (ch.name.rfind("e^(K/P)", 0) == 0) CHECK(ch.pass);
  CHECK_FALSE(rep.all_pass());
}

TEST_CASE("component_size_cutoff and gamma") {
  CHECK(component_size_cutoff(1000, {65536, 64}) == 500);
  CHECK(component_size_cutoff(1000, {100, 10}) == 9);
  CHECK(gamma_of_epsilon(0.5) == doctest::Approx(std::exp(3.0) * 1.5));
}

}  // TEST_SUITE
