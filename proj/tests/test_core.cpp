#include <set>
#include <stdexcept>

#include "doctest.h"
#include "support.hpp"
#include "triples/core.hpp"
#include "triples/rng.hpp"

using namespace triples;

TEST_SUITE("core") {

TEST_CASE("triple normalization and membership") {
  const Triple t = Triple::of(5, 3, 4);
  CHECK(t == Triple{3, 4, 5});
  CHECK(t.contains(4));
  CHECK_FALSE(t.contains(6));
  CHECK(t.third(3, 5) == 4);
  CHECK(t.third(4, 3) == 5);
  CHECK_THROWS_AS(Triple::of(0, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(Triple::of(-3, 4, 5), std::invalid_argument);
  CHECK_THROWS_AS(Triple::of(1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(t.third(3, 6), std::invalid_argument);
  CHECK_THROWS_AS(t.third(4, 4), std::invalid_argument);
}

TEST_CASE("family names round-trip") {
  for (Family f : {Family::pyth, Family::prim, Family::schur, Family::custom})
    CHECK(family_from_name(family_name(f)) == f);
  CHECK_FALSE(family_from_name("fibonacci").has_value());
}

TEST_CASE("pyth generator matches quadratic scan") {
  for (Vertex limit : {1, 4, 5, 12, 13, 20, 50, 100, 300}) {
    CAPTURE(limit);
    CHECK(generate_pyth(limit).edges() == testsupport::brute_pyth_edges(limit));
  }
  const auto small = generate_pyth(12);
  CHECK(small.edges() == std::vector<Triple>{{3, 4, 5}, {6, 8, 10}});
  CHECK(small.family() == Family::pyth);
  CHECK(small.limit() == 12);
  CHECK(generate_pyth(20).edge_count() == 6);
  CHECK_THROWS_AS(generate_pyth(0), std::invalid_argument);
}

TEST_CASE("prim generator matches quadratic scan") {
  for (Vertex limit : {1, 5, 13, 17, 100, 300}) {
    CAPTURE(limit);
    CHECK(generate_prim(limit).edges() == testsupport::brute_prim_edges(limit));
  }
  CHECK(generate_prim(17).edges() ==
        std::vector<Triple>{{3, 4, 5}, {5, 12, 13}, {8, 15, 17}});
}

TEST_CASE("every pyth edge is a dilated prim edge") {
  const auto prim = generate_prim(2000);
  const auto pyth = generate_pyth(2000);
  std::set<Triple> primitive(prim.edges().begin(), prim.edges().end());
  for (const Triple& t : pyth.edges()) {
    const Vertex d = std::gcd(std::gcd(t.a, t.b), t.c);
    CHECK(primitive.count(Triple{t.a / d, t.b / d, t.c / d}) == 1);
  }
}

TEST_CASE("schur generator matches quadratic scan") {
  for (Vertex limit : {3, 4, 5, 9, 25, 60}) {
    CAPTURE(limit);
    CHECK(generate_schur(limit).edges() == testsupport::brute_schur_edges(limit));
  }
  CHECK(generate_schur(5).edges() ==
        std::vector<Triple>{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {2, 3, 5}});
  CHECK_THROWS_AS(generate_schur(2), std::invalid_argument);
}

TEST_CASE("from_edges canonicalizes and validates") {
  const auto sys = TripleSystem::from_edges({Triple{2, 5, 7}, Triple{1, 2, 3},
                                             Triple{2, 5, 7}, Triple{3, 4, 5}});
  CHECK(sys.edges() == std::vector<Triple>{{1, 2, 3}, {2, 5, 7}, {3, 4, 5}});
  CHECK(sys.support() == std::vector<Vertex>{1, 2, 3, 4, 5, 7});
  CHECK(sys.family() == Family::custom);
  CHECK_FALSE(sys.limit().has_value());

  CHECK_THROWS_AS(TripleSystem::from_edges({Triple{1, 2, 3}}, Family::pyth),
                  std::invalid_argument);
  CHECK_THROWS_AS(TripleSystem::from_edges({Triple{6, 8, 10}}, Family::prim),
                  std::invalid_argument);
  CHECK_THROWS_AS(TripleSystem::from_edges({Triple{1, 2, 4}}, Family::schur),
                  std::invalid_argument);
  CHECK_THROWS_AS(TripleSystem::from_edges({Triple{3, 4, 5}}, Family::pyth, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(TripleSystem::from_edges({Triple{2, 4, 3}}), std::invalid_argument);
  CHECK_NOTHROW(TripleSystem::from_edges({Triple{3, 4, 5}}, Family::prim, 13));
}

TEST_CASE("membership queries") {
  const auto sys = generate_pyth(20);
  CHECK(sys.covers(12));
  CHECK_FALSE(sys.covers(7));
  CHECK(sys.support_index(3) == 0);
  CHECK_FALSE(sys.support_index(2).has_value());
  CHECK(sys.contains_edge(Triple{5, 12, 13}));
  CHECK_FALSE(sys.contains_edge(Triple{5, 12, 14}));
  CHECK(sys.pair_covered(16, 20));
  CHECK_FALSE(sys.pair_covered(3, 12));
  CHECK(sys.edges_with_pair(3, 4).size() == 1);
  CHECK(sys.edges()[sys.edges_with_pair(12, 5).front()] == Triple{5, 12, 13});
}

TEST_CASE("incidence index is complete and ascending") {
  const auto sys = generate_schur(30);
  std::size_t total = 0;
  for (Vertex v : sys.support()) {
    const auto ids = sys.incident_edges(v);
    total += ids.size();
    for (std::size_t i = 0; i < ids.size(); ++i) {
      CHECK(sys.edges()[ids[i]].contains(v));
      if (i) CHECK(ids[i - 1] < ids[i]);
    }
  }
  CHECK(total == 3 * sys.edge_count());
  CHECK(sys.incident_edges(1000).empty());

  for (std::uint32_t e = 0; e < sys.edge_count(); ++e) {
    const Triple& t = sys.edges()[e];
    for (auto [x, y] : {VertexPair{t.a, t.b}, VertexPair{t.a, t.c}, VertexPair{t.b, t.c}}) {
      const auto ids = sys.edges_with_pair(x, y);
      CHECK(std::find(ids.begin(), ids.end(), e) != ids.end());
    }
  }
}

TEST_CASE("linearity scan") {
  CHECK_FALSE(is_linear(generate_pyth(100)).has_value());
  CHECK_FALSE(is_linear(TripleSystem{}).has_value());

  const auto clash = is_linear(generate_schur(5));
  REQUIRE(clash.has_value());
  CHECK(clash->first == Triple{1, 2, 3});
  CHECK(clash->second == Triple{1, 3, 4});
}

TEST_CASE("link of a vertex") {
  const auto star = link(generate_pyth(20), 12);
  CHECK(star.center == 12);
  CHECK(star.pairs == std::vector<VertexPair>{{5, 13}, {9, 15}, {16, 20}});
  CHECK(link(generate_pyth(20), 7).pairs.empty());
}

TEST_CASE("shadow graph") {
  const auto sh = shadow(generate_pyth(12));
  CHECK(sh.vertices == std::vector<Vertex>{3, 4, 5, 6, 8, 10});
  CHECK(sh.pairs == std::vector<VertexPair>{{3, 4}, {3, 5}, {4, 5}, {6, 8}, {6, 10}, {8, 10}});

  const auto linear = generate_pyth(100);
  CHECK(shadow(linear).pairs.size() == 3 * linear.edge_count());
}

TEST_CASE("deterministic rng") {
  Rng a(42), b(42), c(43);
  bool all_equal = true, any_diff = false;
  for (int i = 0; i < 64; ++i) {
    const auto x = a.next();
    all_equal = all_equal && x == b.next();
    any_diff = any_diff || x != c.next();
  }
  CHECK(all_equal);
  CHECK(any_diff);
  Rng r(7);
  for (int i = 0; i < 1000; ++i) {
    CHECK(r.below(13) < 13);
    const double u = r.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

}  // TEST_SUITE
