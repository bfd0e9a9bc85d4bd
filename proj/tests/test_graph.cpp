#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "sepsys/error.hpp"
#include "sepsys/graph.hpp"

using namespace sepsys;

namespace {

Level clique(int p) { return Level(1, Vertex{1}, Vertex{p}); }

// Brute force: smallest r in 1..p-1 (either direction) whose rotation maps
// one edge onto the other as a set.
int distance_by_enumeration(const Edge& a, const Edge& b, int p) {
  int best = -1;
  for (int r = 1; r < p; ++r) {
    const Edge moved(((a.u().label - 1 + r) % p) + 1, ((a.v().label - 1 + r) % p) + 1);
    if (moved == b) {
      const int d = std::min(r, p - r);
      if (best < 0 || d < best) best = d;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("edge normalization and accessors") {
  const Edge e(6, 2);
  CHECK(e.u() == Vertex{2});
  CHECK(e.v() == Vertex{6});
  CHECK(e.smaller_end() == Vertex{2});
  CHECK(e.incident_to(Vertex{6}));
  CHECK_THROWS_AS(Edge(3, 3), Error);
}

TEST_CASE("edge_type examples") {
  const Level k7 = clique(7);
  CHECK(edge_type(Edge(2, 6), k7) == 3);
  CHECK(edge_type(Edge(1, 2), k7) == 1);
  CHECK(edge_type(Edge(1, 7), k7) == 1);
  try {
    edge_type(Edge(1, 8), k7);
    FAIL("expected EndpointOutsideLevel");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EndpointOutsideLevel);
  }
}

TEST_CASE("edge_type on a shifted level") {
  const Level lv(2, Vertex{12}, Vertex{16});
  CHECK(edge_type(Edge(12, 16), lv) == 1);
  CHECK(edge_type(Edge(12, 14), lv) == 2);
  CHECK(edge_type(Edge(13, 16), lv) == 2);
}

TEST_CASE("every type has exactly p edges and forms one Hamiltonian cycle") {
  for (int p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    const Level lv = clique(p);
    std::vector<int> count(static_cast<std::size_t>(lv.max_type() + 1), 0);
    for (int a = 1; a <= p; ++a) {
      for (int b = a + 1; b <= p; ++b) {
        const int t = edge_type(Edge(a, b), lv);
        REQUIRE(t >= 1);
        REQUIRE(t <= lv.max_type());
        count[t]++;
      }
    }
    for (int t = 1; t <= lv.max_type(); ++t) {
      CHECK(count[t] == p);
      // Walk v -> v + t and come back only after visiting every vertex.
      std::set<int> seen;
      int v = 0;
      do {
        seen.insert(v);
        v = (v + t) % p;
      } while (v != 0);
      CHECK(static_cast<int>(seen.size()) == p);
      const auto cyc = type_cycle(t, lv);
      CHECK(cyc.size() == static_cast<std::size_t>(p));
      CHECK(std::set<Edge>(cyc.begin(), cyc.end()).size() == static_cast<std::size_t>(p));
    }
  }
}

TEST_CASE("clockwise_distance examples") {
  CHECK(clockwise_distance(Edge(5, 2), Edge(2, 4), clique(5)) == 2);
  CHECK(clockwise_distance(Edge(1, 2), Edge(2, 3), clique(7)) == 1);
  CHECK(clockwise_distance(Edge(1, 2), Edge(6, 7), clique(7)) == 2);
  CHECK(distance_by_enumeration(Edge(5, 2), Edge(2, 4), 5) == 2);
  CHECK(distance_by_enumeration(Edge(1, 2), Edge(6, 7), 7) == 2);
}

TEST_CASE("clockwise_distance errors") {
  const Level k7 = clique(7);
  try {
    clockwise_distance(Edge(1, 2), Edge(1, 3), k7);
    FAIL("expected NotHomotypical");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHomotypical);
  }
  try {
    clockwise_distance(Edge(1, 2), Edge(2, 1), k7);
    FAIL("expected IdenticalEdges");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IdenticalEdges);
  }
}

TEST_CASE("clockwise_distance matches rotation enumeration and is symmetric") {
  for (int p : {5, 7, 11, 13}) {
    const Level lv = clique(p);
    std::vector<Edge> all;
    for (int a = 1; a <= p; ++a)
      for (int b = a + 1; b <= p; ++b) all.emplace_back(a, b);
    for (const Edge& x : all) {
      for (const Edge& y : all) {
        if (x == y || edge_type(x, lv) != edge_type(y, lv)) continue;
        const int d = clockwise_distance(x, y, lv);
        CHECK(d == distance_by_enumeration(x, y, p));
        CHECK(d == clockwise_distance(y, x, lv));
        CHECK(d >= 1);
        CHECK(d <= lv.max_type());
      }
    }
  }
}

TEST_CASE("rotate_path examples") {
  const Level k5 = clique(5);
  const OrientedPath path{1, 5, 2, 4};
  CHECK(rotate_path(path, 1, k5) == OrientedPath{2, 1, 3, 5});
  CHECK(rotate_path(path, 0, k5) == path);
  CHECK(rotate_path(path, 5, k5) == path);
  CHECK_THROWS_AS(rotate_path(OrientedPath{1, 6}, 1, k5), Error);
}

TEST_CASE("rotate_path is a group action") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int p = std::vector<int>{5, 7, 11, 13}[trial % 4];
    const Level lv = clique(p);
    std::vector<int> labels(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) labels[i] = i + 1;
    std::shuffle(labels.begin(), labels.end(), rng);
    labels.resize(std::uniform_int_distribution<std::size_t>(1, labels.size())(rng));
    const OrientedPath path = OrientedPath::from_labels(labels);
    const int r1 = std::uniform_int_distribution<int>(-20, 20)(rng);
    const int r2 = std::uniform_int_distribution<int>(-20, 20)(rng);
    CHECK(rotate_path(rotate_path(path, r1, lv), r2, lv) ==
          rotate_path(path, ((r1 + r2) % p + p) % p, lv));
  }
}

TEST_CASE("connector_edge examples") {
  CHECK(connector_edge(OrientedPath{1, 2}, OrientedPath{3, 4}) == Edge(2, 3));
  CHECK(connector_edge(OrientedPath{5}, OrientedPath{7}) == Edge(5, 7));
  CHECK(connector_edge(OrientedPath{1, 5, 2, 4}, OrientedPath{6}) == Edge(4, 6));
  try {
    connector_edge(OrientedPath{1, 2}, OrientedPath{2, 3});
    FAIL("expected SharedVertex");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SharedVertex);
  }
}

TEST_CASE("concatenate examples") {
  const std::vector<OrientedPath> a{OrientedPath{1, 2}, OrientedPath{3, 4}};
  CHECK(concatenate(a) == OrientedPath{1, 2, 3, 4});
  const std::vector<OrientedPath> b{OrientedPath{1, 2}};
  CHECK(concatenate(b) == OrientedPath{1, 2});
  const std::vector<OrientedPath> c{OrientedPath{2, 1}, OrientedPath{5}, OrientedPath{3, 4}};
  const OrientedPath joined = concatenate(c);
  CHECK(joined == OrientedPath{2, 1, 5, 3, 4});
  // Part edges plus one connector between consecutive parts.
  const auto edges = joined.edges();
  CHECK(std::set<Edge>(edges.begin(), edges.end()) ==
        std::set<Edge>{Edge(1, 2), Edge(1, 5), Edge(5, 3), Edge(3, 4)});
  const std::vector<OrientedPath> bad{OrientedPath{1, 2}, OrientedPath{2, 3}};
  CHECK_THROWS_AS(concatenate(bad), Error);
}

TEST_CASE("paths reject repeated vertices; single vertices are legal") {
  CHECK_THROWS_AS(OrientedPath({1, 2, 1}), Error);
  const OrientedPath single{4};
  CHECK(single.edge_count() == 0);
  CHECK(single.edges().empty());
  CHECK(single.first() == single.last());
}

TEST_CASE("path system names are unique") {
  PathSystem sys;
  sys.add("Q1", OrientedPath{1, 2});
  CHECK_THROWS_AS(sys.add("Q1", OrientedPath{2, 3}), Error);
  CHECK(sys.find("Q1") != nullptr);
  CHECK(sys.find("S") == nullptr);
}

TEST_CASE("type_cycle_without removes exactly one edge and orients low end first") {
  const Level k5 = clique(5);
  const OrientedPath r = type_cycle_without(2, Edge(2, 4), k5);
  CHECK(r == OrientedPath{2, 5, 3, 1, 4});
  const OrientedPath s = type_cycle_without(1, Edge(1, 2), k5);
  CHECK(s == OrientedPath{1, 5, 4, 3, 2});
  CHECK_THROWS_AS(type_cycle_without(1, Edge(1, 3), k5), Error);
}
