#include "sepsys/graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "sepsys/error.hpp"

namespace sepsys {

namespace {

long long mod(long long a, long long p) {
  long long r = a % p;
  return r < 0 ? r + p : r;
}

void require_level_edge(const Edge& e, const Level& lv) {
  if (!lv.contains(e)) {
    throw Error(ErrorCode::EndpointOutsideLevel,
                "edge {" + std::to_string(e.u().label) + "," +
                    std::to_string(e.v().label) + "} not inside level [" +
                    std::to_string(lv.lo().label) + "," +
                    std::to_string(lv.hi().label) + "]");
  }
}

}  // namespace

Edge::Edge(Vertex a, Vertex b) : u_(std::min(a, b)), v_(std::max(a, b)) {
  if (a == b) {
    throw Error(ErrorCode::InvalidEdge,
                "loop at vertex " + std::to_string(a.label));
  }
}

OrientedPath::OrientedPath(std::vector<Vertex> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) {
    throw Error(ErrorCode::InvalidPath, "empty path");
  }
  std::unordered_set<int> seen;
  seen.reserve(vertices_.size() * 2);
  for (Vertex x : vertices_) {
    if (!seen.insert(x.label).second) {
      throw Error(ErrorCode::InvalidPath,
                  "vertex " + std::to_string(x.label) + " repeated");
    }
  }
}

OrientedPath::OrientedPath(std::initializer_list<int> labels)
    : OrientedPath(from_labels(std::span<const int>(labels.begin(), labels.size()))) {}

OrientedPath OrientedPath::from_labels(std::span<const int> labels) {
  std::vector<Vertex> vs;
  vs.reserve(labels.size());
  for (int x : labels) vs.push_back(Vertex{x});
  return OrientedPath(std::move(vs));
}

std::vector<Edge> OrientedPath::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) out.push_back(edge(i));
  return out;
}

bool OrientedPath::contains(Vertex x) const {
  return std::find(vertices_.begin(), vertices_.end(), x) != vertices_.end();
}

std::vector<int> OrientedPath::labels() const {
  std::vector<int> out;
  out.reserve(vertices_.size());
  for (Vertex x : vertices_) out.push_back(x.label);
  return out;
}

OrientedPath OrientedPath::reversed() const {
  return OrientedPath(std::vector<Vertex>(vertices_.rbegin(), vertices_.rend()));
}

Level::Level(int index, Vertex lo, Vertex hi) : index_(index), lo_(lo), hi_(hi) {
  if (hi < lo) {
    throw Error(ErrorCode::OutOfRange, "level with hi < lo");
  }
}

int Level::offset(Vertex x) const {
  if (!contains(x)) {
    throw Error(ErrorCode::EndpointOutsideLevel,
                "vertex " + std::to_string(x.label) + " outside level");
  }
  return x.label - lo_.label;
}

Vertex Level::at(long long offset) const noexcept {
  return Vertex{lo_.label + static_cast<int>(mod(offset, size()))};
}

int edge_type(const Edge& e, const Level& lv) {
  require_level_edge(e, lv);
  const long long p = lv.size();
  const long long a = lv.offset(e.u());
  const long long b = lv.offset(e.v());
  return static_cast<int>(std::min(mod(a - b, p), mod(b - a, p)));
}

Vertex type_start(const Edge& e, const Level& lv) {
  const int t = edge_type(e, lv);
  return mod(lv.offset(e.v()) - lv.offset(e.u()), lv.size()) == t ? e.u() : e.v();
}

int clockwise_distance(const Edge& e1, const Edge& e2, const Level& lv) {
  if (edge_type(e1, lv) != edge_type(e2, lv)) {
    throw Error(ErrorCode::NotHomotypical, "edges have different types");
  }
  if (e1 == e2) {
    throw Error(ErrorCode::IdenticalEdges, "distance of an edge to itself");
  }
  const long long p = lv.size();
  const long long r = mod(lv.offset(type_start(e2, lv)) - lv.offset(type_start(e1, lv)), p);
  return static_cast<int>(std::min(r, p - r));
}

Edge rotate_edge(const Edge& e, long long r, const Level& lv) {
  require_level_edge(e, lv);
  return Edge(lv.at(lv.offset(e.u()) + r), lv.at(lv.offset(e.v()) + r));
}

OrientedPath rotate_path(const OrientedPath& path, long long r, const Level& lv) {
  std::vector<Vertex> out;
  out.reserve(path.size());
  for (Vertex x : path.vertices()) out.push_back(lv.at(lv.offset(x) + r));
  return OrientedPath(std::move(out));
}

Edge connector_edge(const OrientedPath& a, const OrientedPath& b) {
  for (Vertex x : a.vertices()) {
    if (b.contains(x)) {
      throw Error(ErrorCode::SharedVertex,
                  "parts share vertex " + std::to_string(x.label));
    }
  }
  return Edge(a.last(), b.first());
}

OrientedPath concatenate(std::span<const OrientedPath> parts) {
  std::vector<Vertex> out;
  std::unordered_set<int> seen;
  for (const OrientedPath& part : parts) {
    for (Vertex x : part.vertices()) {
      if (!seen.insert(x.label).second) {
        throw Error(ErrorCode::SharedVertex,
                    "parts share vertex " + std::to_string(x.label));
      }
      out.push_back(x);
    }
  }
  return OrientedPath(std::move(out));
}

void PathSystem::add(std::string name, OrientedPath path) {
  if (index_of(name)) {
    throw Error(ErrorCode::DuplicateName, "path name " + name + " already used");
  }
  entries_.push_back(NamedPath{std::move(name), std::move(path)});
}

const OrientedPath* PathSystem::find(const std::string& name) const {
  auto i = index_of(name);
  return i ? &entries_[*i].path : nullptr;
}

std::optional<std::size_t> PathSystem::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].name == name) return i;
  }
  return std::nullopt;
}

std::vector<Edge> type_cycle(int type, const Level& lv) {
  std::vector<Edge> out;
  const int p = lv.size();
  out.reserve(p);
  long long x = 0;
  for (int i = 0; i < p; ++i) {
    out.emplace_back(lv.at(x), lv.at(x + type));
    x += type;
  }
  return out;
}

OrientedPath type_cycle_without(int type, const Edge& excluded, const Level& lv) {
  if (edge_type(excluded, lv) != type) {
    throw Error(ErrorCode::NotHomotypical, "excluded edge has the wrong type");
  }
  // Walk +type from the far end of the removed edge until reaching its start.
  const Vertex start = type_start(excluded, lv);
  std::vector<Vertex> vs;
  vs.reserve(lv.size());
  long long x = lv.offset(start) + type;
  for (int i = 0; i < lv.size(); ++i) {
    vs.push_back(lv.at(x));
    x += type;
  }
  OrientedPath path(std::move(vs));
  return path.first() < path.last() ? path : path.reversed();
}

}  // namespace sepsys
