#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "sepsys/generating_path.hpp"
#include "sepsys/graph.hpp"

namespace sepsys {

/// Injection from the vertices above a level into types {2, ..., (p-1)/2}.
struct PhiAssignment {
  int level_index = 1;
  std::vector<Vertex> externals;  // ascending; externals[0] is s_k + 1
  std::vector<int> images;        // images[j] = phi(externals[j])
  std::vector<std::vector<int>> used_cycles;
  std::vector<int> last_cycle;
  std::optional<int> c;  // sigma^-1(phi(s_k + 1))
  bool exception = false;

  bool empty() const noexcept { return externals.empty(); }
  int operator()(Vertex w) const;
  /// 1-based position of w among the externals.
  std::size_t rank(Vertex w) const;
  bool in_image(int t) const;
  std::optional<Vertex> preimage(int t) const;
};

PhiAssignment assign_phi(const TypePermutation& sigma, std::span<const Vertex> externals,
                         int level_index = 1);

/// Empty when all PhiAssignment invariants hold.
std::optional<std::string> check_phi(const PhiAssignment& phi, const TypePermutation& sigma);

struct DetourRecord {
  int bold_index;  // 1-based
  Vertex external;
  Edge replaced;
};

struct BoldPaths {
  std::vector<OrientedPath> paths;  // paths[i - 1] is bold path i
  std::vector<DetourRecord> detours;
};

/// In rotation i-1 of gp, every edge that rotates the earlier type-t edge of
/// gp (t in the image of phi) is replaced by a detour through phi^-1(t).
BoldPaths build_bold_paths(const GeneratingPath& gp, const PhiAssignment& phi);

/// 1-based indices of the bold paths containing e.
std::set<int> edge_occurrences(const Edge& e, std::span<const OrientedPath> bold);

struct Exclusion {
  std::string part;  // "R<w>", "S" or "T"
  int type;
  Edge edge;
  std::set<int> bold_indices;
};

struct LevelSystem {
  Level level;
  GeneratingPath gp;
  TypePermutation sigma;
  PhiAssignment phi;
  BoldPaths bold;
  std::vector<OrientedPath> r_paths;  // aligned with phi.externals
  std::optional<OrientedPath> s_path;
  std::optional<OrientedPath> t_path;
  std::optional<int> t_type;  // empty when T is a single vertex
  std::vector<Exclusion> excluded;

  const OrientedPath& R(Vertex w) const { return r_paths.at(phi.rank(w) - 1); }
  std::set<int> occurrences(const Edge& e) const { return edge_occurrences(e, bold.paths); }
  /// Types outside image(phi) and {1}.
  std::vector<int> free_types() const;
};

/// Level with phi and bold paths in place, R/S/T still missing.
LevelSystem start_level(const GeneratingPath& gp, std::span<const Vertex> externals);

/// R(w) drops the type-phi(w) edge of bold path rank(w); S drops the type-1
/// edge of bold path |externals| + 1.
void build_R_S(LevelSystem& ls);

/// The connector e(R(s_k+1), next part) when the next part starts at s_k+1.
std::optional<Edge> incoming_connector(const LevelSystem& ls);

/// T covers the exception type c (or the smallest free type) minus the edge
/// sharing g's bold paths; a single vertex when no type is available.
void build_T(LevelSystem& ls, std::optional<Edge> g);

LevelSystem build_level(const GeneratingPath& gp, std::span<const Vertex> externals);

/// Enumerative check of P1-P6 and the surrounding structure; one message per
/// violation, empty when the level is sound.
std::vector<std::string> audit_level(const LevelSystem& ls);

}  // namespace sepsys
