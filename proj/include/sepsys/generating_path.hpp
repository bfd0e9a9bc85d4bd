#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sepsys/graph.hpp"

namespace sepsys {

struct GpCheck {
  bool ok = false;
  std::string violation;  // first violated clause, empty when ok
  explicit operator bool() const noexcept { return ok; }
};

/// Checks the size invariants, exactly one type-1 edge, exactly two edges of
/// every other type, and pairwise distinct distances among homotypical pairs.
GpCheck check_generating(const OrientedPath& path, const Level& lv);

/// A validated generating path of a prime level.
class GeneratingPath {
 public:
  GeneratingPath(Level level, OrientedPath path);

  const Level& level() const noexcept { return level_; }
  const OrientedPath& path() const noexcept { return path_; }
  int p() const noexcept { return level_.size(); }

  /// Positions i (edge between path[i] and path[i+1]) of the type-t edges,
  /// in path order.
  const std::vector<std::size_t>& positions_of_type(int t) const {
    return positions_[static_cast<std::size_t>(t)];
  }

 private:
  Level level_;
  OrientedPath path_;
  std::vector<std::vector<std::size_t>> positions_;
};

/// Permutation of {1, ..., (p-1)/2}, indexable from 1.
class TypePermutation {
 public:
  TypePermutation(int p, std::vector<int> images);

  int p() const noexcept { return p_; }
  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int t) const { return images_.at(static_cast<std::size_t>(t - 1)); }
  int inverse(int t) const { return inverse_.at(static_cast<std::size_t>(t - 1)); }

  /// Cycles, each starting at its smallest element, ordered by that element.
  const std::vector<std::vector<int>>& cycles() const noexcept { return cycles_; }

  bool is_identity() const;

 private:
  int p_;
  std::vector<int> images_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> cycles_;
};

TypePermutation sigma(const GeneratingPath& gp);

/// Depth-first search on offsets 0..p-1 starting at 0, trying steps in
/// ascending order. Empty if the node budget runs out first.
std::optional<std::vector<int>> dfs_generating_offsets(int p, std::uint64_t node_budget);

/// Candidates a * g^j - a (mod p) over primitive roots g, first one the
/// checker accepts.
std::optional<std::vector<int>> geometric_generating_offsets(int p);

inline constexpr std::uint64_t kDefaultDfsBudget = 500'000;

/// Cached per p; the result always passes check_generating and starts at lo.
GeneratingPath find_generating_path(const Level& lv);

/// The p rotations of gp, path i named P<lo+i-1> and starting at lo+i-1.
PathSystem rotation_system(const GeneratingPath& gp);

}  // namespace sepsys
