#include "sepsys/assembly.hpp"

#include <algorithm>

#include "sepsys/base_systems.hpp"
#include "sepsys/error.hpp"
#include "sepsys/generating_path.hpp"

namespace sepsys {

namespace {

int as_int(long long x) { return static_cast<int>(x); }

std::vector<Vertex> labels_above(long long from, long long n) {
  std::vector<Vertex> out;
  for (long long x = from + 1; x <= n; ++x) out.push_back(Vertex{as_int(x)});
  return out;
}

PathSystem relabel_base(const PathSystem& base, int offset) {
  PathSystem out;
  for (std::size_t i = 0; i < base.size(); ++i) {
    std::vector<int> labels = base[i].path.labels();
    for (int& x : labels) x += offset;
    out.add("B" + std::to_string(offset + static_cast<int>(i) + 1),
            OrientedPath::from_labels(labels));
  }
  return out;
}

}  // namespace

int ConstructionPlan::level_of(int l) const {
  for (std::size_t k = 1; k <= decomposition.levels(); ++k) {
    if (l <= decomposition.s(k)) return static_cast<int>(k);
  }
  return static_cast<int>(decomposition.levels()) + 1;
}

ConstructionPlan plan_construction(int n, Strategy strategy, std::uint64_t seed) {
  ConstructionPlan plan;
  plan.n = n;
  plan.decomposition = decompose(n, strategy, seed);
  const Decomposition& d = plan.decomposition;
  for (std::size_t k = 1; k <= d.levels(); ++k) {
    const Level lv(static_cast<int>(k), Vertex{as_int(d.s(k - 1) + 1)}, Vertex{as_int(d.s(k))});
    const auto externals = labels_above(d.s(k), n);
    plan.levels.push_back(build_level(find_generating_path(lv), externals));
  }
  plan.base = relabel_base(base_system(as_int(d.b)), as_int(d.s(d.levels())));

  // P7: no T connector may land on s_k + 1, the first label of level k + 1.
  for (const LevelSystem& ls : plan.levels) {
    OrientedPath part = *ls.t_path;
    if (ls.level.index() > 1 && part.size() > 1 && part.first() == ls.level.lo()) {
      part = part.reversed();
      plan.flips.push_back({ls.level.index(), "T"});
    }
    plan.t_parts.push_back(std::move(part));
  }
  return plan;
}

std::vector<OrientedPath> q_parts(int l, const ConstructionPlan& plan) {
  std::vector<OrientedPath> parts;
  const Decomposition& d = plan.decomposition;
  const int home = plan.level_of(l);
  for (int k = 1; k < home; ++k) parts.push_back(plan.levels[k - 1].R(Vertex{l}));
  if (home <= static_cast<int>(d.levels())) {
    const auto i = static_cast<std::size_t>(l - d.s(static_cast<std::size_t>(home) - 1));
    parts.push_back(plan.levels[home - 1].bold.paths.at(i - 1));
  } else if (const OrientedPath* b = plan.base.find("B" + std::to_string(l))) {
    parts.push_back(*b);
  }
  return parts;
}

PathSystem assemble(const ConstructionPlan& plan) {
  PathSystem out;
  for (int l = 1; l <= plan.n; ++l) {
    out.add("Q" + std::to_string(l), concatenate(q_parts(l, plan)));
  }
  std::vector<OrientedPath> s_parts;
  for (const LevelSystem& ls : plan.levels) s_parts.push_back(*ls.s_path);
  out.add("S", concatenate(s_parts));
  out.add("T", concatenate(plan.t_parts));
  return out;
}

bool uses_base_regime(int n) { return n <= 13 || n == 19; }

PathSystem construct_system(int n, const ConstructionOptions& options) {
  if (n <= 0) throw Error(ErrorCode::InvalidN, "n must be positive, got " + std::to_string(n));
  switch (options.mode) {
    case ConstructionMode::ForceBase:
      return base_system(n);
    case ConstructionMode::ForceConstruct:
      return assemble(plan_construction(n, options.strategy, options.seed));
    case ConstructionMode::Auto:
      break;
  }
  if (uses_base_regime(n)) return base_system(n);
  try {
    return assemble(plan_construction(n, options.strategy, options.seed));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DecompositionFailed && n <= kMaxBase) return base_system(n);
    throw;
  }
}

std::set<Edge> prefix_union_edges(const PathSystem& system, std::size_t k,
                                  const Decomposition& decomposition) {
  std::set<Edge> out;
  const long long upto = decomposition.s(k);
  for (long long l = 1; l <= upto; ++l) {
    const OrientedPath* q = system.find("Q" + std::to_string(l));
    if (q == nullptr) continue;
    for (const Edge& e : q->edges()) out.insert(e);
  }
  return out;
}

std::vector<std::string> audit_plan(const ConstructionPlan& plan, const PathSystem& system) {
  std::vector<std::string> issues;
  const Decomposition& d = plan.decomposition;
  for (const LevelSystem& ls : plan.levels) {
    for (auto& issue : audit_level(ls)) issues.push_back(std::move(issue));
  }
  if (system.size() != static_cast<std::size_t>(plan.n) + 2) issues.push_back("size != n + 2");

  // P7 on the assembled T.
  if (const OrientedPath* t = system.find("T")) {
    for (std::size_t i = 0; i + 1 < t->size(); ++i) {
      const Edge e = t->edge(i);
      const int lu = plan.level_of(e.u().label);
      const int lv = plan.level_of(e.v().label);
      if (lu != lv && e.incident_to(Vertex{as_int(d.s(static_cast<std::size_t>(lu))) + 1})) {
        issues.push_back("P7: T connector " + std::to_string(e.u().label) + "-" +
                         std::to_string(e.v().label) + " touches s_k + 1");
      }
    }
  } else {
    issues.push_back("T missing");
  }

  // Q^l misses one vertex of its own level and nothing above or below it.
  for (int l = 1; l <= as_int(d.s(d.levels())); ++l) {
    const OrientedPath* q = system.find("Q" + std::to_string(l));
    if (q == nullptr) {
      issues.push_back("Q" + std::to_string(l) + " missing");
      continue;
    }
    const int home = plan.level_of(l);
    int missing_home = 0;
    bool ok = true;
    for (int x = 1; x <= plan.n; ++x) {
      const bool in = q->contains(Vertex{x});
      const int lx = plan.level_of(x);
      if (lx == home) {
        missing_home += in ? 0 : 1;
      } else if (!in && (lx < home || x > d.s(static_cast<std::size_t>(home)))) {
        ok = false;
      }
    }
    if (!ok || missing_home != 1) {
      issues.push_back("Q" + std::to_string(l) + " has the wrong vertex set");
    }
  }
  return issues;
}

}  // namespace sepsys
