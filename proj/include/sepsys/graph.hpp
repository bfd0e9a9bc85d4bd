#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sepsys {

/// A vertex of the ambient K_n, identified by its label in [1, n].
struct Vertex {
  int label = 0;
  auto operator<=>(const Vertex&) const = default;
};

/// Undirected edge stored with the smaller label first.
class Edge {
 public:
  Edge(Vertex a, Vertex b);
  Edge(int a, int b) : Edge(Vertex{a}, Vertex{b}) {}

  Vertex u() const noexcept { return u_; }
  Vertex v() const noexcept { return v_; }
  Vertex smaller_end() const noexcept { return u_; }
  Vertex greater_end() const noexcept { return v_; }
  bool incident_to(Vertex x) const noexcept { return x == u_ || x == v_; }

  auto operator<=>(const Edge&) const = default;

 private:
  Vertex u_;
  Vertex v_;
};

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    return std::hash<long long>{}(
        (static_cast<long long>(e.u().label) << 32) ^ e.v().label);
  }
};

/// A simple path with a distinguished first and last vertex.
class OrientedPath {
 public:
  explicit OrientedPath(std::vector<Vertex> vertices);
  OrientedPath(std::initializer_list<int> labels);
  static OrientedPath from_labels(std::span<const int> labels);

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return vertices_.size() - 1; }
  Vertex first() const noexcept { return vertices_.front(); }
  Vertex last() const noexcept { return vertices_.back(); }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }

  /// Edge between positions i and i+1.
  Edge edge(std::size_t i) const { return Edge(vertices_[i], vertices_[i + 1]); }
  std::vector<Edge> edges() const;
  bool contains(Vertex x) const;
  std::vector<int> labels() const;

  OrientedPath reversed() const;

  bool operator==(const OrientedPath&) const = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Contiguous label interval [lo, hi] viewed as a labelled clique.
class Level {
 public:
  Level(int index, Vertex lo, Vertex hi);

  int index() const noexcept { return index_; }
  Vertex lo() const noexcept { return lo_; }
  Vertex hi() const noexcept { return hi_; }
  int size() const noexcept { return hi_.label - lo_.label + 1; }
  int max_type() const noexcept { return (size() - 1) / 2; }

  bool contains(Vertex x) const noexcept { return lo_ <= x && x <= hi_; }
  bool contains(const Edge& e) const noexcept {
    return contains(e.u()) && contains(e.v());
  }
  /// Zero-based position of x inside the level; throws if x is outside.
  int offset(Vertex x) const;
  /// Vertex at zero-based position, reduced modulo the level size.
  Vertex at(long long offset) const noexcept;

  bool operator==(const Level&) const = default;

 private:
  int index_;
  Vertex lo_;
  Vertex hi_;
};

/// Type of an edge inside a level of odd size p, in [1, (p-1)/2].
int edge_type(const Edge& e, const Level& lv);

/// For an edge of type t, the endpoint x with x + t (mod p) the other one.
Vertex type_start(const Edge& e, const Level& lv);

/// Minimum rotation order r or p-r mapping one homotypical edge onto the other.
int clockwise_distance(const Edge& e1, const Edge& e2, const Level& lv);

Edge rotate_edge(const Edge& e, long long r, const Level& lv);
OrientedPath rotate_path(const OrientedPath& path, long long r, const Level& lv);

/// The edge joining the last vertex of `a` to the first vertex of `b`.
Edge connector_edge(const OrientedPath& a, const OrientedPath& b);

OrientedPath concatenate(std::span<const OrientedPath> parts);

struct NamedPath {
  std::string name;
  OrientedPath path;
  bool operator==(const NamedPath&) const = default;
};

class PathSystem {
 public:
  PathSystem() = default;

  void add(std::string name, OrientedPath path);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::vector<NamedPath>& entries() const noexcept { return entries_; }
  const NamedPath& operator[](std::size_t i) const { return entries_[i]; }
  const OrientedPath* find(const std::string& name) const;
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool operator==(const PathSystem&) const = default;

 private:
  std::vector<NamedPath> entries_;
};

/// All type-t edges of a prime level in cycle order starting from lo.
std::vector<Edge> type_cycle(int type, const Level& lv);

/// The Hamiltonian path obtained from the type-t cycle by removing `excluded`,
/// oriented with its smaller-labelled endpoint first.
OrientedPath type_cycle_without(int type, const Edge& excluded, const Level& lv);

}  // namespace sepsys
