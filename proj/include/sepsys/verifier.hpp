#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sepsys/graph.hpp"

namespace sepsys {

/// Vertex sequence as read from outside, before any path invariant is known.
struct RawPath {
  std::string name;
  std::vector<int> vertices;
};

struct PathValidation {
  bool ok = true;
  std::string first_violation;
  explicit operator bool() const noexcept { return ok; }
};

PathValidation validate_paths(std::span<const RawPath> paths, int n);
PathValidation validate_paths(const PathSystem& system, int n);

/// Edge -> names of every path containing it, over all C(n, 2) edges of K_n.
class SignatureIndex {
 public:
  SignatureIndex(const PathSystem& system, int n);

  int n() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return signatures_.size(); }
  const std::vector<std::string>& path_names() const noexcept { return names_; }

  /// Sorted indices into path_names().
  const std::vector<int>& signature_ids(const Edge& e) const;
  std::vector<std::string> signature(const Edge& e) const;

  Edge edge_at(std::size_t id) const;
  std::size_t edge_id(const Edge& e) const;

 private:
  int n_;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> signatures_;
};

struct VerificationReport {
  bool valid_paths = false;
  bool separating = false;
  std::optional<std::pair<Edge, Edge>> witness;
  std::size_t path_count = 0;
  std::size_t max_multiplicity = 0;
  /// histogram[k] = number of edges lying in exactly k paths.
  std::vector<std::size_t> multiplicity_histogram;
};

/// Signature-distinctness test with a hash prefilter and exact comparison.
VerificationReport is_separating(const PathSystem& system, int n);

/// Direct definition: every pair of edges has a path containing exactly one.
/// Quadratic in the number of edges; meant for cross-checking.
bool is_separating_pairwise(const PathSystem& system, int n, unsigned threads = 1);

struct NoMatch {};
struct Ambiguous {
  std::vector<Edge> candidates;
};
using DecodeResult = std::variant<Edge, NoMatch, Ambiguous>;

DecodeResult decode_fault(const SignatureIndex& index, const std::set<std::string>& failed);

inline constexpr int kOracleMaxN = 5;

/// Smallest k <= max_size such that some k paths of K_n separate it, by
/// exhaustive enumeration; empty when none is found within max_size.
std::optional<int> min_size_oracle(int n, int max_size, unsigned threads = 1);

}  // namespace sepsys
