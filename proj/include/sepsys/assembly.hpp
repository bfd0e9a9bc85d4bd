#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "sepsys/decomposition.hpp"
#include "sepsys/graph.hpp"
#include "sepsys/level_builder.hpp"

namespace sepsys {

struct OrientationFlip {
  int level;
  std::string part;
};

/// Everything the final system is concatenated from.
struct ConstructionPlan {
  int n = 0;
  Decomposition decomposition;
  std::vector<LevelSystem> levels;  // levels[k - 1] is level k
  PathSystem base;                  // K_b on [s_m + 1, n], names B<l>
  std::vector<OrientedPath> t_parts;  // T_k as chained, after P7 orientation
  std::vector<OrientationFlip> flips;

  /// 1-based level containing label l, or m + 1 for the base block.
  int level_of(int l) const;
};

ConstructionPlan plan_construction(int n, Strategy strategy = Strategy::GreedyMax,
                                   std::uint64_t seed = 0);

/// R parts below the level of l, then bold P^l or base B^l when defined.
std::vector<OrientedPath> q_parts(int l, const ConstructionPlan& plan);

/// Q1..Qn, S, T.
PathSystem assemble(const ConstructionPlan& plan);

enum class ConstructionMode { Auto, ForceBase, ForceConstruct };

struct ConstructionOptions {
  Strategy strategy = Strategy::GreedyMax;
  std::uint64_t seed = 0;
  ConstructionMode mode = ConstructionMode::Auto;
};

bool uses_base_regime(int n);

PathSystem construct_system(int n, const ConstructionOptions& options = {});

/// Union of the edge sets of Q1..Q^{s_k}.
std::set<Edge> prefix_union_edges(const PathSystem& system, std::size_t k,
                                  const Decomposition& decomposition);

/// Per-level audits plus P7 and the vertex structure of every Q^l.
std::vector<std::string> audit_plan(const ConstructionPlan& plan, const PathSystem& system);

}  // namespace sepsys
