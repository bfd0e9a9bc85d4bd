#include "sepsys/base_systems.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <random>

#include <json.hpp>

#include "sepsys/decomposition.hpp"
#include "sepsys/error.hpp"
#include "sepsys/generating_path.hpp"
#include "sepsys/io.hpp"
#include "sepsys/verifier.hpp"

namespace sepsys {

namespace {

PathSystem renamed(const PathSystem& system) {
  PathSystem out;
  for (std::size_t i = 0; i < system.size(); ++i) {
    out.add("B" + std::to_string(i + 1), system[i].path);
  }
  return out;
}

// Simulated annealing over k paths of K_b. Signatures are bitmasks over path
// indices; the cost counts pairs of edges with equal signatures.
class Annealer {
 public:
  Annealer(int b, int k, std::uint64_t seed, BaseSearchLimits limits)
      : b_(b), k_(k), limits_(limits), rng_(seed), sig_(edge_count(), 0) {}

  std::optional<std::vector<std::vector<int>>> run() {
    for (int restart = 0; restart < limits_.restarts; ++restart) {
      randomize();
      long long cost = full_cost();
      const double t0 = 1.5;
      const double t1 = 0.02;
      const auto iters = limits_.iterations_per_restart;
      for (std::uint64_t it = 0; it < iters && cost > 0; ++it) {
        const double temp = t0 * std::pow(t1 / t0, static_cast<double>(it) / iters);
        const int i = uniform(0, k_ - 1);
        const std::vector<int> before = paths_[i];
        if (!mutate(paths_[i])) continue;
        apply_delta(before, paths_[i], i);
        const long long next = full_cost();
        const double accept = std::exp(static_cast<double>(cost - next) / temp);
        if (next <= cost || std::uniform_real_distribution<double>(0, 1)(rng_) < accept) {
          cost = next;
        } else {
          apply_delta(paths_[i], before, i);
          paths_[i] = before;
        }
      }
      if (cost == 0) return paths_;
    }
    return std::nullopt;
  }

 private:
  int edge_count() const { return b_ * (b_ - 1) / 2; }
  int edge_id(int x, int y) const {
    if (x > y) std::swap(x, y);
    return x * (2 * b_ - x - 1) / 2 + (y - x - 1);
  }
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  void randomize() {
    paths_.assign(static_cast<std::size_t>(k_), {});
    std::fill(sig_.begin(), sig_.end(), 0u);
    std::vector<int> perm(static_cast<std::size_t>(b_));
    for (int i = 0; i < k_; ++i) {
      for (int v = 0; v < b_; ++v) perm[v] = v;
      std::shuffle(perm.begin(), perm.end(), rng_);
      const int len = uniform(std::max(2, b_ / 2), b_);
      paths_[i].assign(perm.begin(), perm.begin() + len);
      apply_delta({}, paths_[i], i);
    }
  }

  void apply_delta(const std::vector<int>& removed, const std::vector<int>& added, int i) {
    const std::uint32_t bit = 1u << i;
    for (std::size_t j = 0; j + 1 < removed.size(); ++j) {
      sig_[edge_id(removed[j], removed[j + 1])] &= ~bit;
    }
    for (std::size_t j = 0; j + 1 < added.size(); ++j) {
      sig_[edge_id(added[j], added[j + 1])] |= bit;
    }
  }

  long long full_cost() {
    scratch_ = sig_;
    std::sort(scratch_.begin(), scratch_.end());
    long long cost = 0;
    for (std::size_t i = 0; i < scratch_.size();) {
      std::size_t j = i;
      while (j < scratch_.size() && scratch_[j] == scratch_[i]) ++j;
      const long long run = static_cast<long long>(j - i);
      cost += run * (run - 1) / 2;
      i = j;
    }
    return cost;
  }

  int unvisited(const std::vector<int>& path) {
    std::vector<int> free;
    for (int v = 0; v < b_; ++v) {
      if (std::find(path.begin(), path.end(), v) == path.end()) free.push_back(v);
    }
    return free.empty() ? -1 : free[uniform(0, static_cast<int>(free.size()) - 1)];
  }

  bool mutate(std::vector<int>& path) {
    const int len = static_cast<int>(path.size());
    switch (uniform(0, 6)) {
      case 0: {  // reverse a segment
        int a = uniform(0, len - 1), c = uniform(0, len - 1);
        if (a == c) return false;
        if (a > c) std::swap(a, c);
        std::reverse(path.begin() + a, path.begin() + c + 1);
        return true;
      }
      case 1: {  // grow at an end
        const int w = unvisited(path);
        if (w < 0) return false;
        if (uniform(0, 1)) path.push_back(w); else path.insert(path.begin(), w);
        return true;
      }
      case 2: {  // shrink at an end
        if (len <= 2) return false;
        if (uniform(0, 1)) path.pop_back(); else path.erase(path.begin());
        return true;
      }
      case 3: {  // replace a vertex
        const int w = unvisited(path);
        if (w < 0) return false;
        path[uniform(0, len - 1)] = w;
        return true;
      }
      case 4: {  // insert a vertex
        const int w = unvisited(path);
        if (w < 0) return false;
        path.insert(path.begin() + uniform(1, len - 1), w);
        return true;
      }
      case 5: {  // drop an interior vertex
        if (len <= 2) return false;
        path.erase(path.begin() + uniform(1, len - 2));
        return true;
      }
      default: {  // swap two vertices
        const int a = uniform(0, len - 1), c = uniform(0, len - 1);
        if (a == c) return false;
        std::swap(path[a], path[c]);
        return true;
      }
    }
  }

  int b_;
  int k_;
  BaseSearchLimits limits_;
  std::mt19937_64 rng_;
  std::vector<std::vector<int>> paths_;
  std::vector<std::uint32_t> sig_;
  std::vector<std::uint32_t> scratch_;
};

BaseAsset load_asset(int b) {
  if (b < 1 || b > kMaxBase) {
    throw Error(ErrorCode::OutOfRange, "base systems exist for 1 <= b <= 19");
  }
  const std::string_view text = embedded_base_json(b);
  if (text.empty()) throw Error(ErrorCode::AssetCorrupt, "no asset for b = " + std::to_string(b));
  BaseAsset asset;
  asset.b = b;
  try {
    RawSystem raw = parse_raw_system(text);
    if (raw.n != b) throw Error(ErrorCode::AssetCorrupt, "asset n mismatch");
    asset.system = to_path_system(raw);
    const auto manifest = nlohmann::json::parse(embedded_base_manifest());
    const auto& entry = manifest.at(std::to_string(b));
    auto prov = parse_provenance(entry.at("provenance").get<std::string>());
    if (!prov) throw Error(ErrorCode::AssetCorrupt, "unknown provenance");
    asset.provenance = *prov;
    asset.seed = entry.at("seed").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::AssetCorrupt, e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::AssetCorrupt) throw;
    throw Error(ErrorCode::AssetCorrupt, e.what());
  }
  if (auto bad = check_base_asset(asset)) {
    throw Error(ErrorCode::AssetCorrupt, "K" + std::to_string(b) + ": " + *bad);
  }
  return asset;
}

}  // namespace

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Trivial: return "trivial";
    case Provenance::Rotation: return "rotation";
    case Provenance::Searched: return "searched";
  }
  return "unknown";
}

std::optional<Provenance> parse_provenance(std::string_view name) {
  if (name == "trivial") return Provenance::Trivial;
  if (name == "rotation") return Provenance::Rotation;
  if (name == "searched") return Provenance::Searched;
  return std::nullopt;
}

std::optional<std::string> check_base_asset(const BaseAsset& asset) {
  const int b = asset.b;
  if (!validate_paths(asset.system, b)) return "invalid paths";
  if (b == 1) {
    if (!asset.system.empty()) return "K1 must have the empty system";
    return std::nullopt;
  }
  if (static_cast<int>(asset.system.size()) > b) return "more than b paths";
  if (asset.system.empty() || asset.system[0].path.first() != Vertex{1}) {
    return "first path does not start at vertex 1";
  }
  if (!is_separating(asset.system, b).separating) return "not separating";
  return std::nullopt;
}

const BaseAsset& base_asset(int b) {
  static std::array<std::optional<BaseAsset>, kMaxBase + 1> cache;
  static std::mutex mutex;
  if (b < 1 || b > kMaxBase) {
    throw Error(ErrorCode::OutOfRange, "base systems exist for 1 <= b <= 19");
  }
  std::lock_guard lock(mutex);
  if (!cache[b]) cache[b] = load_asset(b);
  return *cache[b];
}

PathSystem base_system(int b) { return base_asset(b).system; }

PathSystem search_base_system(int b, int size_budget, std::uint64_t seed,
                              BaseSearchLimits limits) {
  if (b < 2 || b > kMaxBase) {
    throw Error(ErrorCode::OutOfRange, "search covers 2 <= b <= 19");
  }
  if (b == 2 && size_budget >= 1) {
    PathSystem out;
    out.add("B1", OrientedPath{1, 2});
    return out;
  }
  if (b % 2 == 1 && is_prime(static_cast<std::uint64_t>(b)) && size_budget >= b) {
    return renamed(rotation_system(find_generating_path(Level(1, Vertex{1}, Vertex{b}))));
  }
  if (size_budget < 1 || size_budget > 32) {
    throw Error(ErrorCode::SearchBudgetExhausted, "size budget outside [1, 32]");
  }
  auto found = Annealer(b, size_budget, seed, limits).run();
  if (!found) {
    throw Error(ErrorCode::SearchBudgetExhausted,
                "no separating system of size " + std::to_string(size_budget) +
                    " for K" + std::to_string(b));
  }
  // Swap labels so the first path starts at vertex 1.
  const int head = found->front().front();
  PathSystem out;
  for (std::size_t i = 0; i < found->size(); ++i) {
    std::vector<int> labels;
    for (int v : (*found)[i]) {
      labels.push_back((v == head ? 0 : v == 0 ? head : v) + 1);
    }
    out.add("B" + std::to_string(i + 1), OrientedPath::from_labels(labels));
  }
  return out;
}

}  // namespace sepsys
