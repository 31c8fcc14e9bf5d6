#pragma once

// Evaluators for the closed-form isolation, denseness and component bounds.
// Every evaluator reports the log of its value too, so comparisons deep in
// the tail remain meaningful. Regime violations are flagged, not thrown.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rkgrgg/combinatorics.hpp"
#include "rkgrgg/graph.hpp"

namespace rkgrgg {

struct BoundValue {
  double value = 0.0;
  double log_value = 0.0;
  bool regime_ok = true;
};

// --- joint isolation geometry ---------------------------------------------

/// far: d > 2r, mid: r <= d <= 2r, near: d < r.
enum class SeparationCase { far, mid, near };

std::string_view to_string(SeparationCase c) noexcept;
SeparationCase classify_separation(double distance, double radius) noexcept;

/// Area of the intersection of two disks of radius r whose centres are d
/// apart.
double lens_area(double distance, double radius) noexcept;

struct IsolationGeometry {
  double distance = 0.0;
  SeparationCase kind = SeparationCase::far;
  // B1/B2: disk around node 1/2 minus the lens; B3: the lens; B4: the rest.
  std::array<double, 4> areas{};
  // Nodes (other than 1 and 2) that fall in each region.
  std::array<std::size_t, 4> counts{};
};

/// Region areas ignore edge effects (exact on the torus for r <= 1/4).
IsolationGeometry isolation_geometry(Point node1, Point node2, double radius,
                                     Boundary boundary,
                                     std::span<const Point> others = {});

// --- isolation probabilities ------------------------------------------------

struct IsolationProbability {
  double value = 0.0;       // (1 - a beta)^(n-1)
  double log_value = 0.0;
  Sandwich sandwich;        // exp(-(n-1)x/(1-x)) < value < exp(-(n-1)x)
};

/// P{Z_1} = (1 - a beta)^(n-1). Throws DomainError unless 0 < a beta < 1 and
/// n >= 2.
IsolationProbability single_isolation_probability(std::uint64_t n, double area,
                                                  double beta);

/// Lower bound on n P{Z_1} when a beta = (log n + c1)/n:
/// e^{-c1} exp(-(log n + c1)^2 / (n - (log n + c1))).
BoundValue isolation_count_lower_bound(std::uint64_t n, double c1);

struct JointIsolationBound {
  double value = 0.0;
  double log_value = 0.0;
  double gamma = 0.0;  // |beta_tilde/beta - 2|
};

/// far: (1 - 2 a beta)^(n-2); mid/near: exp(-(n-2)(2 - gamma) a beta).
JointIsolationBound joint_isolation_bound(std::uint64_t n, double area,
                                          double beta, double beta_tilde,
                                          SeparationCase kind);

struct DisconnectBound {
  double floor = 0.0;      // e^{-c1}/4
  double log_floor = 0.0;
  double finite_n = 0.0;   // Bonferroni lower bound at this n
  double epsilon = 0.0;
  bool regime_ok = true;   // c1 > 0 and n > log n + c1
};

/// epsilon = (1 - log d_n / log n) / 2.
double default_epsilon(double density, std::uint64_t n);

DisconnectBound disconnect_lower_bound(double c1, std::uint64_t n,
                                       double epsilon);

// --- tessellation bounds ----------------------------------------------------

struct DensenessBound {
  double per_cell = 0.0;       // 2 exp(-n s^2 delta^2 / 4)
  double log_per_cell = 0.0;
  double union_bound = 0.0;    // per_cell / s^2
  double log_union_bound = 0.0;
};

DensenessBound denseness_bound(double n, double cell_side, double delta);

struct ComponentBound {
  double value = 0.0;
  double log_value = 0.0;
  double log_key_term = 0.0;        // log of C(P,x)(x/P)^{lK} e^{-(N-l)K^2/P}
  double log_connected_term = 0.0;  // log of l^{l-2} beta^{l-1} e^{-(N-l)K(x+1)/P}
};

/// Upper bound on the probability that a given l-subset of a cell with
/// N nodes forms an isolated component. Throws DomainError unless
/// K <= x <= min(lK, P) and 1 <= l <= N/2.
ComponentBound component_bound(std::uint64_t cell_nodes, std::uint64_t l,
                               std::uint64_t x, const KeyPoolParams& pool,
                               double beta);

/// n^{-(alpha(1-delta)/(2 pi) - 1)/2}; regime_ok false (value clamped to 1)
/// when alpha <= 2 pi / (1 - delta).
BoundValue cell_isolation_bound(double alpha, double delta, std::uint64_t n);

// --- constants for the sufficiency argument ---------------------------------

struct SufficiencyConstants {
  double sigma = 1.0;
  double lambda = 0.25;
  double mu = 0.4;
  double delta = 0.5;
  std::uint64_t R = 8;
  double epsilon = 0.5;
  double alpha = 0.0;
};

/// Gamma(eps) = e^{(1+eps)/(1-eps)} (1+eps).
double gamma_of_epsilon(double epsilon);

/// min(floor(N/2), floor(P/K) - 1).
std::uint64_t component_size_cutoff(std::uint64_t cell_nodes,
                                    const KeyPoolParams& pool);

struct ConstraintCheck {
  std::string name;
  double lhs = 0.0;
  std::string relation;
  double rhs = 0.0;
  bool pass = false;
};

struct ConstantsReport {
  std::vector<ConstraintCheck> checks;
  double gamma_eps = 0.0;
  std::optional<std::uint64_t> l1;

  [[nodiscard]] bool all_pass() const noexcept;
};

ConstantsReport sufficiency_constants_check(
    const SufficiencyConstants& consts, const KeyPoolParams& pool,
    std::optional<std::uint64_t> cell_nodes = std::nullopt);

}  // namespace rkgrgg
