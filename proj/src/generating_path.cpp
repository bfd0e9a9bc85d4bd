#include "sepsys/generating_path.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>

#include "sepsys/decomposition.hpp"
#include "sepsys/error.hpp"
#include "sepsys/io.hpp"

namespace sepsys {

namespace {

long long mod(long long a, long long p) {
  long long r = a % p;
  return r < 0 ? r + p : r;
}

long long pow_mod(long long a, long long e, long long m) {
  long long r = 1;
  a = mod(a, m);
  while (e > 0) {
    if (e & 1) r = r * a % m;
    a = a * a % m;
    e >>= 1;
  }
  return r;
}

bool is_primitive_root(long long g, long long p) {
  long long phi = p - 1;
  long long rest = phi;
  for (long long q = 2; q * q <= rest; ++q) {
    if (rest % q != 0) continue;
    while (rest % q == 0) rest /= q;
    if (pow_mod(g, phi / q, p) == 1) return false;
  }
  if (rest > 1 && pow_mod(g, phi / rest, p) == 1) return false;
  return true;
}

class DfsSearch {
 public:
  DfsSearch(int p, std::uint64_t budget)
      : p_(p),
        half_(( p - 1) / 2),
        budget_(budget),
        used_(static_cast<std::size_t>(p), false),
        count_(static_cast<std::size_t>(half_ + 1), 0),
        first_start_(static_cast<std::size_t>(half_ + 1), -1),
        distance_used_(static_cast<std::size_t>(half_ + 1), false) {}

  std::optional<std::vector<int>> run() {
    path_.push_back(0);
    used_[0] = true;
    if (extend()) return path_;
    return std::nullopt;
  }

 private:
  bool extend() {
    if (++nodes_ > budget_) return false;
    if (static_cast<int>(path_.size()) == p_ - 1) return true;
    const int v = path_.back();
    for (int d = 1; d < p_; ++d) {
      const int w = (v + d) % p_;
      if (used_[w]) continue;
      const int t = d <= half_ ? d : p_ - d;
      const int cap = t == 1 ? 1 : 2;
      if (count_[t] >= cap) continue;
      const int start = d <= half_ ? v : w;
      int dist = -1;
      if (t > 1 && count_[t] == 1) {
        const int r = static_cast<int>(mod(start - first_start_[t], p_));
        dist = std::min(r, p_ - r);
        if (distance_used_[dist]) continue;
      }
      used_[w] = true;
      path_.push_back(w);
      if (++count_[t] == 1) first_start_[t] = start;
      if (dist >= 0) distance_used_[dist] = true;
      if (extend()) return true;
      if (dist >= 0) distance_used_[dist] = false;
      --count_[t];
      path_.pop_back();
      used_[w] = false;
      if (nodes_ > budget_) return false;
    }
    return false;
  }

  int p_;
  int half_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> path_;
  std::vector<bool> used_;
  std::vector<int> count_;
  std::vector<int> first_start_;
  std::vector<bool> distance_used_;
};

Level canonical_level(int p) { return Level(1, Vertex{0}, Vertex{p - 1}); }

bool offsets_valid(const std::vector<int>& offsets, int p) {
  if (offsets.empty() || offsets.front() != 0) return false;
  for (int x : offsets) {
    if (x < 0 || x >= p) return false;
  }
  try {
    return check_generating(OrientedPath::from_labels(offsets), canonical_level(p)).ok;
  } catch (const Error&) {
    return false;
  }
}

std::vector<int> search_offsets(int p) {
  if (auto found = dfs_generating_offsets(p, kDefaultDfsBudget)) return *found;
  if (auto found = geometric_generating_offsets(p)) return *found;
  throw Error(ErrorCode::SearchExhausted,
              "no generating path found for p = " + std::to_string(p));
}

class OffsetCache {
 public:
  std::vector<int> get(int p) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = entries_.find(p); it != entries_.end()) return it->second;
    }
    std::vector<int> offsets = load_or_search(p);
    std::lock_guard lock(mutex_);
    return entries_.emplace(p, std::move(offsets)).first->second;
  }

 private:
  static std::optional<std::filesystem::path> cache_file(int p) {
    const char* dir = std::getenv("SEPSYS_CACHE");
    if (dir == nullptr || *dir == '\0') return std::nullopt;
    return std::filesystem::path(dir) / ("gp_" + std::to_string(p) + ".json");
  }

  static std::vector<int> load_or_search(int p) {
    auto file = cache_file(p);
    if (file && std::filesystem::exists(*file)) {
      try {
        PathSystem cached = read_system_file(*file).system;
        if (cached.size() == 1) {
          // Stored on labels 1..p.
          std::vector<int> offsets = cached[0].path.labels();
          for (int& x : offsets) --x;
          if (offsets_valid(offsets, p)) return offsets;
        }
      } catch (const Error&) {
      }
      // Unreadable or failing entries are replaced below.
    }
    std::vector<int> offsets = search_offsets(p);
    if (file) {
      std::error_code ec;
      std::filesystem::create_directories(file->parent_path(), ec);
      PathSystem out;
      std::vector<int> labels = offsets;
      for (int& x : labels) ++x;
      out.add("P1", OrientedPath::from_labels(labels));
      try {
        write_system_file(*file, out, p);
      } catch (const Error&) {
      }
    }
    return offsets;
  }

  std::mutex mutex_;
  std::map<int, std::vector<int>> entries_;
};

OffsetCache& offset_cache() {
  static OffsetCache cache;
  return cache;
}

}  // namespace

GpCheck check_generating(const OrientedPath& path, const Level& lv) {
  const int p = lv.size();
  if (p < 3 || p % 2 == 0) return {false, "level size must be odd and >= 3"};
  const int half = lv.max_type();
  for (Vertex x : path.vertices()) {
    if (!lv.contains(x)) return {false, "vertex outside level"};
  }
  if (static_cast<int>(path.size()) != p - 1) {
    return {false, "path must have p - 1 vertices"};
  }
  std::vector<std::vector<Edge>> by_type(static_cast<std::size_t>(half + 1));
  for (const Edge& e : path.edges()) by_type[edge_type(e, lv)].push_back(e);
  if (by_type[1].size() != 1) return {false, "GP1: expected exactly one edge of type 1"};
  for (int t = 2; t <= half; ++t) {
    if (by_type[t].size() != 2) {
      return {false, "GP2: expected exactly two edges of type " + std::to_string(t)};
    }
  }
  std::vector<bool> seen(static_cast<std::size_t>(half + 1), false);
  for (int t = 2; t <= half; ++t) {
    const int d = clockwise_distance(by_type[t][0], by_type[t][1], lv);
    if (seen[d]) {
      return {false, "GP3: clockwise distance " + std::to_string(d) + " repeated"};
    }
    seen[d] = true;
  }
  return {true, {}};
}

GeneratingPath::GeneratingPath(Level level, OrientedPath path)
    : level_(level), path_(std::move(path)) {
  if (auto check = check_generating(path_, level_); !check) {
    throw Error(ErrorCode::InvalidPath, "not a generating path: " + check.violation);
  }
  positions_.resize(static_cast<std::size_t>(level_.max_type() + 1));
  for (std::size_t i = 0; i < path_.edge_count(); ++i) {
    positions_[edge_type(path_.edge(i), level_)].push_back(i);
  }
}

TypePermutation::TypePermutation(int p, std::vector<int> images)
    : p_(p), images_(std::move(images)) {
  const auto n = images_.size();
  if (static_cast<int>(n) != (p - 1) / 2) {
    throw Error(ErrorCode::OutOfRange, "permutation degree must be (p - 1) / 2");
  }
  inverse_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const int img = images_[i];
    if (img < 1 || img > static_cast<int>(n) || inverse_[img - 1] != 0) {
      throw Error(ErrorCode::OutOfRange, "mapping is not a bijection");
    }
    inverse_[img - 1] = static_cast<int>(i + 1);
  }
  std::vector<bool> visited(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (visited[i]) continue;
    std::vector<int> cycle;
    int x = static_cast<int>(i + 1);
    while (!visited[x - 1]) {
      visited[x - 1] = true;
      cycle.push_back(x);
      x = images_[x - 1];
    }
    cycles_.push_back(std::move(cycle));
  }
}

bool TypePermutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i + 1)) return false;
  }
  return true;
}

TypePermutation sigma(const GeneratingPath& gp) {
  const int half = gp.level().max_type();
  std::vector<int> images(static_cast<std::size_t>(half), 0);
  std::vector<bool> realized(static_cast<std::size_t>(half + 1), false);
  for (int t = 2; t <= half; ++t) {
    const auto& pos = gp.positions_of_type(t);
    const int d = clockwise_distance(gp.path().edge(pos[0]), gp.path().edge(pos[1]),
                                     gp.level());
    images[t - 1] = d;
    realized[d] = true;
  }
  for (int d = 1; d <= half; ++d) {
    if (!realized[d]) {
      images[0] = d;
      break;
    }
  }
  return TypePermutation(gp.p(), std::move(images));
}

std::optional<std::vector<int>> dfs_generating_offsets(int p, std::uint64_t node_budget) {
  if (p < 3 || p % 2 == 0) return std::nullopt;
  return DfsSearch(p, node_budget).run();
}

std::optional<std::vector<int>> geometric_generating_offsets(int p) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) return std::nullopt;
  const int half = (p - 1) / 2;
  for (long long g = 2; g < p; ++g) {
    if (!is_primitive_root(g, p)) continue;
    // Scale so the single unpaired step has type 1.
    const long long unpaired = pow_mod(g, half - 1, p) * mod(g - 1, p) % p;
    const long long a = pow_mod(unpaired, p - 2, p);
    std::vector<int> offsets;
    offsets.reserve(static_cast<std::size_t>(p - 1));
    long long power = 1;
    for (int j = 0; j < p - 1; ++j) {
      offsets.push_back(static_cast<int>(mod(a * power - a, p)));
      power = power * g % p;
    }
    if (offsets_valid(offsets, p)) return offsets;
  }
  return std::nullopt;
}

GeneratingPath find_generating_path(const Level& lv) {
  const int p = lv.size();
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw Error(ErrorCode::OutOfRange,
                "generating paths need an odd prime level, got " + std::to_string(p));
  }
  std::vector<int> offsets = offset_cache().get(p);
  std::vector<Vertex> vs;
  vs.reserve(offsets.size());
  for (int x : offsets) vs.push_back(lv.at(x));
  return GeneratingPath(lv, OrientedPath(std::move(vs)));
}

PathSystem rotation_system(const GeneratingPath& gp) {
  PathSystem out;
  const Level& lv = gp.level();
  const int shift = lv.offset(gp.path().first());
  for (int i = 0; i < lv.size(); ++i) {
    OrientedPath rotated = rotate_path(gp.path(), i - shift, lv);
    std::string name = "P" + std::to_string(rotated.first().label);
    out.add(std::move(name), std::move(rotated));
  }
  return out;
}

}  // namespace sepsys
