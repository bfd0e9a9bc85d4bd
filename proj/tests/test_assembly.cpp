#include <doctest.h>

#include <set>
#include <vector>

#include "sepsys/assembly.hpp"
#include "sepsys/error.hpp"
#include "sepsys/verifier.hpp"

using namespace sepsys;

namespace {

std::set<Edge> edges_touching_prefix(int n, long long s) {
  std::set<Edge> out;
  for (int a = 1; a <= s; ++a)
    for (int b = a + 1; b <= n; ++b) out.insert(Edge(a, b));
  return out;
}

}  // namespace

TEST_CASE("construct_system sizes and separation") {
  for (int n : {14, 15, 16, 17, 18, 20, 21, 35, 64}) {
    CAPTURE(n);
    const PathSystem sys = construct_system(n);
    CHECK(sys.size() == static_cast<std::size_t>(n + 2));
    CHECK(is_separating(sys, n).separating);
    CHECK(sys[static_cast<std::size_t>(n)].name == "S");
    CHECK(sys[static_cast<std::size_t>(n + 1)].name == "T");
    CHECK(sys[0].name == "Q1");
  }
}

TEST_CASE("small n uses the stored base system") {
  for (int n = 1; n <= 13; ++n) {
    CHECK(uses_base_regime(n));
    const PathSystem sys = construct_system(n);
    CHECK(sys.size() <= static_cast<std::size_t>(std::max(n, 1)));
    CHECK(is_separating(sys, n).separating);
  }
  CHECK(uses_base_regime(19));
  CHECK(construct_system(19).size() <= 19);
  CHECK_FALSE(uses_base_regime(14));
}

TEST_CASE("construct_system rejects non-positive n") {
  for (int n : {0, -3}) {
    try {
      construct_system(n);
      FAIL("expected InvalidN");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidN);
    }
  }
}

TEST_CASE("forced modes") {
  ConstructionOptions base;
  base.mode = ConstructionMode::ForceBase;
  CHECK(construct_system(17, base).size() <= 17);
  ConstructionOptions build;
  build.mode = ConstructionMode::ForceConstruct;
  CHECK(construct_system(14, build).size() == 16);
  CHECK_THROWS_AS(construct_system(19, build), Error);
}

TEST_CASE("construction is deterministic") {
  for (Strategy s : {Strategy::GreedyMax, Strategy::GreedyMin}) {
    ConstructionOptions o;
    o.strategy = s;
    CHECK(construct_system(120, o) == construct_system(120, o));
  }
  ConstructionOptions r;
  r.strategy = Strategy::SeededRandom;
  r.seed = 5;
  const PathSystem a = construct_system(150, r);
  CHECK(a == construct_system(150, r));
  CHECK(is_separating(a, 150).separating);
}

TEST_CASE("q_parts examples") {
  const ConstructionPlan plan = plan_construction(100, Strategy::GreedyMin);
  REQUIRE(plan.decomposition.primes == std::vector<long long>{71, 23});
  CHECK(plan.level_of(1) == 1);
  CHECK(plan.level_of(80) == 2);
  CHECK(plan.level_of(95) == 3);

  const auto first = q_parts(5, plan);
  REQUIRE(first.size() == 1);
  CHECK(first[0] == plan.levels[0].bold.paths[4]);

  const auto mid = q_parts(80, plan);
  REQUIRE(mid.size() == 2);
  CHECK(mid[0] == plan.levels[0].R(Vertex{80}));
  CHECK(mid[1] == plan.levels[1].bold.paths[80 - 72]);

  const auto top = q_parts(95, plan);
  REQUIRE(top.size() == 3);
  CHECK(top[0] == plan.levels[0].R(Vertex{95}));
  CHECK(top[1] == plan.levels[1].R(Vertex{95}));
  CHECK(top[2] == *plan.base.find("B95"));
  CHECK(top[2].first() == Vertex{95});
}

TEST_CASE("prefix union examples") {
  const PathSystem twenty = construct_system(20);
  CHECK(prefix_union_edges(twenty, 1, decompose(20)) == edges_touching_prefix(20, 17));
  const PathSystem fourteen = construct_system(14);
  CHECK(prefix_union_edges(fourteen, 1, decompose(14)) == edges_touching_prefix(14, 11));
  const Decomposition d = decompose(100, Strategy::GreedyMin);
  ConstructionOptions o;
  o.strategy = Strategy::GreedyMin;
  const PathSystem hundred = construct_system(100, o);
  for (std::size_t k = 1; k <= d.levels(); ++k) {
    CHECK(prefix_union_edges(hundred, k, d) == edges_touching_prefix(100, d.s(k)));
  }
}

TEST_CASE("plan audit passes and matches the assembled system") {
  for (int n : {20, 47, 100}) {
    for (Strategy s : {Strategy::GreedyMax, Strategy::GreedyMin}) {
      const ConstructionPlan plan = plan_construction(n, s);
      const PathSystem sys = assemble(plan);
      const auto issues = audit_plan(plan, sys);
      CHECK_MESSAGE(issues.empty(), (issues.empty() ? "" : issues.front()));
      ConstructionOptions o;
      o.strategy = s;
      CHECK(sys == construct_system(n, o));
    }
  }
}

TEST_CASE("T connectors avoid the first vertex of the next level") {
  for (int n : {100, 250, 300}) {
    const ConstructionPlan plan = plan_construction(n, Strategy::GreedyMin);
    for (std::size_t k = 1; k < plan.t_parts.size(); ++k) {
      const Edge e = connector_edge(plan.t_parts[k - 1], plan.t_parts[k]);
      CHECK_FALSE(e.incident_to(Vertex{static_cast<int>(plan.decomposition.s(k)) + 1}));
    }
  }
}

TEST_CASE("audit_plan notices a tampered system") {
  const ConstructionPlan plan = plan_construction(20);
  const PathSystem good = assemble(plan);
  PathSystem bad;
  for (const auto& entry : good.entries()) {
    if (entry.name != "Q3") {
      bad.add(entry.name, entry.path);
      continue;
    }
    auto labels = entry.path.labels();
    labels.pop_back();
    bad.add(entry.name, OrientedPath::from_labels(labels));
  }
  CHECK_FALSE(audit_plan(plan, bad).empty());
}
