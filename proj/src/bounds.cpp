#include "rkgrgg/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rkgrgg/error.hpp"

namespace rkgrgg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_add_exp(double a, double b) noexcept {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

}  // namespace

std::string_view to_string(SeparationCase c) noexcept {
  switch (c) {
    case SeparationCase::far:
      return "far";
    case SeparationCase::mid:
      return "mid";
    case SeparationCase::near:
      break;
  }
  return "near";
}

SeparationCase classify_separation(double distance, double radius) noexcept {
  if (distance > 2.0 * radius) return SeparationCase::far;
  if (distance < radius) return SeparationCase::near;
  return SeparationCase::mid;
}

double lens_area(double distance, double radius) noexcept {
  if (distance >= 2.0 * radius) return 0.0;
  if (distance <= 0.0) return kPi * radius * radius;
  const double r2 = radius * radius;
  return 2.0 * r2 * std::acos(distance / (2.0 * radius)) -
         0.5 * distance * std::sqrt(4.0 * r2 - distance * distance);
}

IsolationGeometry isolation_geometry(Point node1, Point node2, double radius,
                                     Boundary boundary,
                                     std::span<const Point> others) {
  IsolationGeometry g;
  g.distance = distance(node1, node2, boundary);
  g.kind = classify_separation(g.distance, radius);
  const double lens = lens_area(g.distance, radius);
  const double disk = kPi * radius * radius;
  g.areas = {disk - lens, disk - lens, lens, 1.0 - 2.0 * (disk - lens) - lens};
  const double r2 = radius * radius;
  for (const Point& p : others) {
    const bool in1 = distance_squared(p, node1, boundary) <= r2;
    const bool in2 = distance_squared(p, node2, boundary) <= r2;
    const std::size_t region = in1 && in2 ? 2 : in1 ? 0 : in2 ? 1 : 3;
    ++g.counts[region];
  }
  return g;
}

IsolationProbability single_isolation_probability(std::uint64_t n, double area,
                                                  double beta) {
  const double x = area * beta;
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError("single_isolation_probability: a*beta must lie in (0,1)");
  }
  if (n < 2) {
    throw DomainError("single_isolation_probability: n must be >= 2");
  }
  IsolationProbability out;
  out.sandwich = exp_sandwich(x, n - 1);
  out.value = out.sandwich.value;
  out.log_value = out.sandwich.log_value;
  return out;
}

BoundValue isolation_count_lower_bound(std::uint64_t n, double c1) {
  const double nd = static_cast<double>(n);
  const double level = std::log(nd) + c1;
  BoundValue b;
  b.regime_ok = c1 > 0.0 && nd > level;
  b.log_value = -c1 - level * level / (nd - level);
  b.value = std::exp(b.log_value);
  return b;
}

JointIsolationBound joint_isolation_bound(std::uint64_t n, double area,
                                          double beta, double beta_tilde,
                                          SeparationCase kind) {
  if (n < 2) throw DomainError("joint_isolation_bound: n must be >= 2");
  if (!(beta > 0.0 && beta <= 1.0) || !(beta_tilde >= 0.0 && beta_tilde <= 1.0)) {
    throw DomainError("joint_isolation_bound: probabilities must lie in (0,1]");
  }
  const double ab = area * beta;
  const double others = static_cast<double>(n - 2);
  JointIsolationBound out;
  out.gamma = std::fabs(beta_tilde / beta - 2.0);
  if (kind == SeparationCase::far) {
    if (!(2.0 * ab < 1.0)) {
      throw DomainError("joint_isolation_bound: 2*a*beta must be < 1");
    }
    out.log_value = others == 0.0 ? 0.0 : others * std::log1p(-2.0 * ab);
  } else {
    out.log_value = -others * (2.0 - out.gamma) * ab;
  }
  out.value = std::exp(out.log_value);
  return out;
}

double default_epsilon(double density, std::uint64_t n) {
  return 0.5 * (1.0 - std::log(density) / std::log(static_cast<double>(n)));
}

DisconnectBound disconnect_lower_bound(double c1, std::uint64_t n,
                                       double epsilon) {
  DisconnectBound out;
  out.epsilon = epsilon;
  out.log_floor = -c1 - 2.0 * kLn2;
  out.floor = std::exp(out.log_floor);
  const double nd = static_cast<double>(n);
  const double level = std::log(nd) + c1;
  out.regime_ok = c1 > 0.0 && nd > level && epsilon > 0.0;
  const double single = std::exp(-level * level / (nd - level));
  const double pair_far = std::exp(-c1 + 4.0 * level / nd) / 2.0;
  const double pair_close = std::exp(2.0 * c1 - epsilon * std::log(nd));
  out.finite_n = std::exp(-c1) * (single - pair_far - pair_close);
  return out;
}

DensenessBound denseness_bound(double n, double cell_side, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("denseness_bound: delta must lie in (0,1)");
  }
  if (!(cell_side > 0.0)) {
    throw DomainError("denseness_bound: cell_side must be > 0");
  }
  DensenessBound out;
  out.log_per_cell = kLn2 - n * cell_side * cell_side * delta * delta / 4.0;
  out.per_cell = std::exp(out.log_per_cell);
  out.log_union_bound = out.log_per_cell - 2.0 * std::log(cell_side);
  out.union_bound = std::exp(out.log_union_bound);
  return out;
}

ComponentBound component_bound(std::uint64_t cell_nodes, std::uint64_t l,
                               std::uint64_t x, const KeyPoolParams& pool,
                               double beta) {
  const std::uint64_t p = pool.pool_size;
  const std::uint64_t k = pool.ring_size;
  if (l < 1 || 2 * l > cell_nodes) {
    throw DomainError("component_bound: l must lie in [1, N/2]");
  }
  if (k < 1 || x < k || x > std::min(l * k, p)) {
    throw DomainError("component_bound: x must lie in [K, min(lK, P)]");
  }
  const double pd = static_cast<double>(p);
  const double kd = static_cast<double>(k);
  const double ld = static_cast<double>(l);
  const double xd = static_cast<double>(x);
  const double rest = static_cast<double>(cell_nodes - l);

  ComponentBound out;
  out.log_key_term = log_binomial(p, x) + ld * kd * std::log(xd / pd) -
                     rest * kd * kd / pd;
  double log_tree = 0.0;
  if (l >= 2) {
    log_tree = beta > 0.0
                   ? (ld - 2.0) * std::log(ld) + (ld - 1.0) * std::log(beta)
                   : kNegInf;
  }
  out.log_connected_term = log_tree - rest * kd * (xd + 1.0) / pd;
  out.log_value = log_add_exp(out.log_key_term, out.log_connected_term);
  out.value = std::exp(out.log_value);
  return out;
}

BoundValue cell_isolation_bound(double alpha, double delta, std::uint64_t n) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("cell_isolation_bound: delta must lie in (0,1)");
  }
  BoundValue b;
  const double exponent = (alpha * (1.0 - delta) / (2.0 * kPi) - 1.0) / 2.0;
  b.regime_ok = alpha > 2.0 * kPi / (1.0 - delta);
  if (exponent <= 0.0) {
    b.value = 1.0;
    b.log_value = 0.0;
    return b;
  }
  b.log_value = -exponent * std::log(static_cast<double>(n));
  b.value = std::exp(b.log_value);
  return b;
}

double gamma_of_epsilon(double epsilon) {
  return std::exp((1.0 + epsilon) / (1.0 - epsilon)) * (1.0 + epsilon);
}

std::uint64_t component_size_cutoff(std::uint64_t cell_nodes,
                                    const KeyPoolParams& pool) {
  const std::uint64_t by_keys = pool.pool_size / pool.ring_size;
  return std::min(cell_nodes / 2, by_keys == 0 ? 0 : by_keys - 1);
}

bool ConstantsReport::all_pass() const noexcept {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ConstraintCheck& c) { return c.pass; });
}

ConstantsReport sufficiency_constants_check(const SufficiencyConstants& c,
                                            const KeyPoolParams& pool,
                                            std::optional<std::uint64_t> cell_nodes) {
  ConstantsReport rep;
  auto add = [&](std::string name, double lhs, std::string rel, double rhs,
                 bool pass) {
    rep.checks.push_back({std::move(name), lhs, std::move(rel), rhs, pass});
  };
  const double p = static_cast<double>(pool.pool_size);
  const double k = static_cast<double>(pool.ring_size);

  add("delta in (0,1)", c.delta, "<", 1.0, c.delta > 0.0 && c.delta < 1.0);
  add("mu in (0,0.44)", c.mu, "<", 0.44, c.mu > 0.0 && c.mu < 0.44);
  add("lambda in (0,1/2)", c.lambda, "<", 0.5, c.lambda > 0.0 && c.lambda < 0.5);
  add("epsilon in (0,1)", c.epsilon, "<", 1.0, c.epsilon > 0.0 && c.epsilon < 1.0);
  add("P >= 2K", p, ">=", 2.0 * k, pool.pool_size >= 2 * pool.ring_size);

  const double alpha_min = 2.0 * kPi / (1.0 - c.delta);
  add("alpha > 2 pi/(1-delta)", c.alpha, ">", alpha_min, c.alpha > alpha_min);

  const double mu_rate = c.mu - (1.0 + c.mu) * std::log(c.mu);
  const double sigma_min = (1.0 + c.delta) * kLn2 / mu_rate;
  add("sigma >= (1+delta) log2 / log(e^mu/mu^(1+mu))", c.sigma, ">=", sigma_min,
      c.sigma >= sigma_min);

  const double k_min = 2.0 * kLn2 / c.mu;
  add("K > 2 log2 / mu", k, ">", k_min, k > k_min);

  const double lr = c.lambda * static_cast<double>(c.R);
  const double lr_min = c.alpha * (1.0 - c.delta) / (2.0 * kPi);
  add("lambda R > alpha(1-delta)/(2 pi)", lr, ">", lr_min, lr > lr_min);

  const double small_ratio = std::exp(2.0 + k * k / p + std::log1p(c.delta) -
                                      (k - 2.0) * kLn2 - std::log(c.sigma));
  add("e^(2+K^2/P)(1+delta)/(2^(K-2) sigma) < 1", small_ratio, "<", 1.0,
      small_ratio < 1.0);

  const double geometric_ratio =
      std::exp(k / p + c.lambda * (2.0 + std::log1p(c.delta) - std::log(c.sigma)) +
               (1.0 - 2.0 * c.lambda) * std::log(c.lambda));
  add("e^(K/P)(e^2(1+delta)/sigma)^lambda lambda^(1-2 lambda) < 1",
      geometric_ratio, "<", 1.0, geometric_ratio < 1.0);

  rep.gamma_eps = gamma_of_epsilon(c.epsilon);
  const double gk = rep.gamma_eps * k * k / p;
  add("Gamma(eps) K^2/P < 1", gk, "<", 1.0, gk < 1.0);

  if (cell_nodes) rep.l1 = component_size_cutoff(*cell_nodes, pool);
  return rep;
}

}  // namespace rkgrgg
