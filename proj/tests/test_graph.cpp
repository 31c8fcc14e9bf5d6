#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <vector>

#include "rkgrgg/error.hpp"
#include "rkgrgg/graph.hpp"
#include "rkgrgg/graph_io.hpp"
#include "rkgrgg/harness.hpp"
#include "rkgrgg/random.hpp"

using namespace rkgrgg;

TEST_SUITE("graph") {

TEST_CASE("sample_positions") {
  const auto one = sample_positions(1, 5);
  REQUIRE(one.size() == 1);
  CHECK(one[0].x >= 0.0);
  CHECK(one[0].x < 1.0);
  CHECK(one[0].y >= 0.0);
  CHECK(one[0].y < 1.0);

  const auto pts = sample_positions(10000, 17);
  double sx = 0.0, sy = 0.0;
  for (auto p : pts) {
    sx += p.x;
    sy += p.y;
  }
  const double sigma = 1.0 / std::sqrt(12.0 * 10000.0);
  CHECK(std::fabs(sx / 10000.0 - 0.5) <= 3.0 * sigma);
  CHECK(std::fabs(sy / 10000.0 - 0.5) <= 3.0 * sigma);

  CHECK(sample_positions(10000, 17) == pts);
  CHECK(sample_positions(10000, 18) != pts);
}

TEST_CASE("positions are a prefix-stable per-node stream") {
  const auto small = sample_positions(10, 3);
  const auto large = sample_positions(100, 3);
  for (std::size_t i = 0; i < 10; ++i) CHECK(small[i] == large[i]);
}

TEST_CASE("sample_key_rings") {
  const auto full = sample_key_rings(5, {7, 7}, 1);
  for (const auto& r : full) CHECK(r == KeyRing{0, 1, 2, 3, 4, 5, 6});

  const auto rings = sample_key_rings(1000, {100, 10}, 2);
  std::vector<int> seen(100, 0);
  for (const auto& r : rings) {
    REQUIRE(r.size() == 10);
    for (std::size_t i = 1; i < r.size(); ++i) CHECK(r[i - 1] < r[i]);
    for (auto k : r) {
      REQUIRE(k < 100);
      ++seen[k];
    }
  }
  // Marginal inclusion ~ Binomial(1000, 0.1) per key.
  const double sigma = std::sqrt(1000.0 * 0.1 * 0.9);
  int outside = 0;
  for (int c : seen) outside += std::fabs(c - 100.0) > 3.0 * sigma;
  CHECK(outside <= 2);
  CHECK(sample_key_rings(1000, {100, 10}, 2) == rings);
}

TEST_CASE("large pools keep rings small and distinct") {
  const auto ring = sample_key_ring(42, 1000000000ULL, 50);
  REQUIRE(ring.size() == 50);
  for (std::size_t i = 1; i < ring.size(); ++i) CHECK(ring[i - 1] < ring[i]);
  CHECK(ring.back() < 1000000000ULL);
}

TEST_CASE("share-a-key frequency matches beta") {
  const KeyPoolParams pool{5, 2};
  std::uint64_t hits = 0;
  const std::uint64_t pairs = 20000;
  for (std::uint64_t i = 0; i < pairs; ++i) {
    const auto a = sample_key_ring(derive_seed(11, StreamTag::rings, 2 * i), 5, 2);
    const auto b = sample_key_ring(derive_seed(11, StreamTag::rings, 2 * i + 1), 5, 2);
    hits += shares_key(a, b);
  }
  CHECK(wilson_interval(hits, pairs, kZ99).contains(0.7));

  std::uint64_t big_hits = 0;
  for (std::uint64_t i = 0; i < pairs; ++i) {
    const auto a = sample_key_ring(derive_seed(12, StreamTag::rings, 2 * i), 10000, 20);
    const auto b = sample_key_ring(derive_seed(12, StreamTag::rings, 2 * i + 1), 10000, 20);
    big_hits += shares_key(a, b);
  }
  CHECK(wilson_interval(big_hits, pairs, kZ99).contains(link_probability({10000, 20}).beta));
}

TEST_CASE("shares_key") {
  CHECK(shares_key(KeyRing{1, 3}, KeyRing{3, 9}));
  CHECK_FALSE(shares_key(KeyRing{1, 3}, KeyRing{4, 9}));
  CHECK_FALSE(shares_key(KeyRing{}, KeyRing{4, 9}));
}

TEST_CASE("edge rules on two close nodes") {
  const double r = 0.1;
  std::vector<Point> pos{{0.5, 0.5}, {0.5 + 0.5 * r, 0.5}};
  std::vector<KeyRing> rings{{0, 1}, {2, 3}};
  CHECK(build_graph(pos, rings, r, Boundary::square, EdgeRule::intersection)
            .topology().edge_count() == 0);
  CHECK(build_graph(pos, rings, r, Boundary::square, EdgeRule::geometric_only)
            .topology().edge_count() == 1);
  CHECK(build_graph(pos, {}, r, Boundary::square, EdgeRule::geometric_only)
            .topology().edge_count() == 1);
  CHECK(build_graph(pos, rings, r, Boundary::square, EdgeRule::key_only)
            .topology().edge_count() == 0);
  CHECK_THROWS_AS(build_graph(pos, rings, 0.0, Boundary::square, EdgeRule::intersection),
                  DomainError);
  CHECK_THROWS_AS(build_graph(pos, rings, -1.0, Boundary::torus, EdgeRule::geometric_only),
                  DomainError);
}

TEST_CASE("torus wraps across the edges") {
  std::vector<Point> pos{{0.01, 0.5}, {0.99, 0.5}};
  CHECK(build_graph(pos, {}, 0.05, Boundary::torus, EdgeRule::geometric_only)
            .topology().edge_count() == 1);
  CHECK(build_graph(pos, {}, 0.05, Boundary::square, EdgeRule::geometric_only)
            .topology().edge_count() == 0);
}

TEST_CASE("distance is symmetric and torus <= square") {
  CounterRng rng(7);
  for (int i = 0; i < 1000; ++i) {
    const Point a{rng.uniform01(), rng.uniform01()};
    const Point b{rng.uniform01(), rng.uniform01()};
    CHECK(distance(a, b, Boundary::torus) == distance(b, a, Boundary::torus));
    CHECK(distance(a, b, Boundary::square) == distance(b, a, Boundary::square));
    CHECK(distance(a, b, Boundary::torus) <= distance(a, b, Boundary::square));
  }
}

TEST_CASE("grid construction equals all-pairs construction") {
  const EdgeRule rules[] = {EdgeRule::geometric_only, EdgeRule::key_only,
                            EdgeRule::intersection};
  for (int i = 0; i < 60; ++i) {
    const std::uint64_t seed = derive_seed(3, StreamTag::selftest, i);
    const std::size_t n = 200;
    const double radius = 0.02 + 0.01 * i;
    const Boundary b = i % 2 ? Boundary::torus : Boundary::square;
    const EdgeRule rule = rules[i % 3];
    auto pos = sample_positions(n, seed);
    auto rings = sample_key_rings(n, {30, 2}, seed);
    CAPTURE(i);
    CHECK(build_graph(pos, rings, radius, b, rule).topology() ==
          build_graph_reference(pos, rings, radius, b, rule).topology());
  }
}

TEST_CASE("intersection edges = geometric edges cap key edges") {
  for (int i = 0; i < 20; ++i) {
    const std::uint64_t seed = derive_seed(4, StreamTag::selftest, i);
    auto pos = sample_positions(150, seed);
    auto rings = sample_key_rings(150, {40, 3}, seed);
    const Boundary b = i % 2 ? Boundary::torus : Boundary::square;
    const auto geo = build_graph(pos, rings, 0.15, b, EdgeRule::geometric_only).topology().edges();
    const auto key = build_graph(pos, rings, 0.15, b, EdgeRule::key_only).topology().edges();
    const auto both = build_graph(pos, rings, 0.15, b, EdgeRule::intersection).topology().edges();
    std::set<Edge> k(key.begin(), key.end());
    std::vector<Edge> expect;
    for (auto e : geo) {
      if (k.count(e)) expect.push_back(e);
    }
    CHECK(both == expect);
  }
}

TEST_CASE("adjacency is symmetric without self-loops") {
  const auto g = generate_instance({300, {50, 4}, 0.12, Boundary::torus, EdgeRule::intersection}, 9);
  const auto& t = g.topology();
  for (NodeId v = 0; v < t.node_count(); ++v) {
    for (auto u : t.neighbors(v)) {
      CHECK(u != v);
      CHECK(t.has_edge(u, v));
      const auto d = distance(g.positions()[u], g.positions()[v], Boundary::torus);
      CHECK(d <= 0.12);
      CHECK(shares_key(g.key_rings()[u], g.key_rings()[v]));
    }
  }
}

TEST_CASE("generate_instance is deterministic") {
  const ModelParams p{120, {60, 3}, 0.2, Boundary::square, EdgeRule::intersection};
  CHECK(generate_instance(p, 5).topology() == generate_instance(p, 5).topology());
}

TEST_CASE("validate names the failing field") {
  ModelParams p{1, {10, 2}, 0.2, Boundary::square, EdgeRule::intersection};
  CHECK_THROWS_WITH_AS(validate(p), doctest::Contains("n"), ValidationError);
  p.n = 10;
  p.radius = 0.0;
  CHECK_THROWS_WITH_AS(validate(p), doctest::Contains("radius"), ValidationError);
  p.radius = 0.2;
  p.pool = {3, 4};
  CHECK_THROWS_WITH_AS(validate(p), doctest::Contains("ring"), ValidationError);
  p.pool = {3, 3};
  CHECK_NOTHROW(validate(p));
  p.pool = {3, 4};
  p.rule = EdgeRule::geometric_only;
  CHECK_NOTHROW(validate(p));
}

TEST_CASE("Graph::from_edges") {
  std::vector<Edge> e{{0, 1}, {1, 0}, {2, 1}};
  const auto g = Graph::from_edges(4, e);
  CHECK(g.node_count() == 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  std::vector<Edge> loop{{2, 2}};
  CHECK_THROWS_AS(Graph::from_edges(4, loop), DomainError);
  std::vector<Edge> out{{0, 4}};
  CHECK_THROWS_AS(Graph::from_edges(4, out), DomainError);
}

TEST_CASE("edge list round trip") {
  const ModelParams p{100, {50, 5}, 0.2, Boundary::square, EdgeRule::intersection};
  const auto g = generate_instance(p, 7);
  std::ostringstream out;
  write_edge_list(g, out);
  const std::string text = out.str();
  std::istringstream first(text);
  std::string header;
  std::getline(first, header);
  CHECK(header == "100 " + std::to_string(g.topology().edge_count()) + " 0.2 square intersection");
  std::istringstream in(text);
  EdgeListHeader h;
  const auto back = read_edge_list(in, &h);
  CHECK(back == g.topology());
  CHECK(h.radius == 0.2);
  CHECK(h.rule == EdgeRule::intersection);

  std::istringstream bad("3 2 0.1 square intersection\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(bad), ValidationError);
  std::istringstream garbage("3 x 0.1 square intersection\n");
  CHECK_THROWS_AS(read_edge_list(garbage), ValidationError);
}

TEST_CASE("instance JSON round trip") {
  const ModelParams p{80, {40, 3}, 0.25, Boundary::torus, EdgeRule::intersection};
  const auto g = generate_instance(p, 21);
  const auto doc = instance_to_json(g, p, 21);
  const auto back = instance_from_json(nlohmann::json::parse(doc.dump()));
  CHECK(back.seed == 21);
  CHECK(back.params.n == 80);
  CHECK(back.graph.topology() == g.topology());
  CHECK(std::vector<Point>(back.graph.positions().begin(), back.graph.positions().end()) ==
        std::vector<Point>(g.positions().begin(), g.positions().end()));
}

}  // TEST_SUITE
