#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "sepsys/graph.hpp"

namespace sepsys {

inline constexpr int kMaxBase = 19;

enum class Provenance { Trivial, Rotation, Searched };

std::string_view to_string(Provenance p);
std::optional<Provenance> parse_provenance(std::string_view name);

/// A separating system for K_b on labels [1, b] with at most max(b, 1)
/// paths, named B1.., the first of which starts at vertex 1.
struct BaseAsset {
  int b = 0;
  PathSystem system;
  Provenance provenance = Provenance::Trivial;
  std::uint64_t seed = 0;
};

/// Empty when the asset is separating and meets the size and first-vertex rules.
std::optional<std::string> check_base_asset(const BaseAsset& asset);

/// Shipped asset for K_b, re-verified the first time it is loaded.
const BaseAsset& base_asset(int b);
PathSystem base_system(int b);

struct BaseSearchLimits {
  int restarts = 200;
  std::uint64_t iterations_per_restart = 400'000;
};

/// Rotation system for prime b when it fits the budget, otherwise seeded
/// simulated annealing over systems of `size_budget` paths.
PathSystem search_base_system(int b, int size_budget, std::uint64_t seed,
                              BaseSearchLimits limits = {});

/// Raw JSON of the embedded asset files (empty when missing).
std::string_view embedded_base_json(int b);
std::string_view embedded_base_manifest();

}  // namespace sepsys
