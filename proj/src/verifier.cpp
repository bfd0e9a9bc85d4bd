#include "sepsys/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "sepsys/error.hpp"

namespace sepsys {

namespace {

std::size_t pair_count(int n) {
  return n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2;
}

// Row-major index of {u, v}, u < v, among the edges of K_n.
std::size_t edge_index(int n, int u, int v) {
  const std::size_t a = static_cast<std::size_t>(u - 1);
  const std::size_t b = static_cast<std::size_t>(v - 1);
  return a * (2 * static_cast<std::size_t>(n) - a - 1) / 2 + (b - a - 1);
}

std::uint64_t hash_ids(const std::vector<int>& ids) {
  std::uint64_t h = 1469598103934665603ULL;
  for (int x : ids) {
    h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return h;
}

void for_each_index(std::size_t count, unsigned threads,
                    const std::function<void(std::size_t)>& body) {
  threads = std::max(1u, threads);
  if (threads == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

PathValidation validate_paths(std::span<const RawPath> paths, int n) {
  std::unordered_set<std::string> names;
  for (const RawPath& p : paths) {
    if (!names.insert(p.name).second) return {false, "duplicate path name " + p.name};
    if (p.vertices.empty()) return {false, p.name + ": empty path"};
    std::unordered_set<int> seen;
    for (int x : p.vertices) {
      if (x < 1 || x > n) {
        return {false, p.name + ": label " + std::to_string(x) + " outside [1, " +
                           std::to_string(n) + "]"};
      }
      if (!seen.insert(x).second) {
        return {false, p.name + ": vertex " + std::to_string(x) + " repeated"};
      }
    }
  }
  return {};
}

PathValidation validate_paths(const PathSystem& system, int n) {
  std::vector<RawPath> raw;
  raw.reserve(system.size());
  for (const auto& entry : system.entries()) raw.push_back({entry.name, entry.path.labels()});
  return validate_paths(raw, n);
}

SignatureIndex::SignatureIndex(const PathSystem& system, int n)
    : n_(n), signatures_(pair_count(n)) {
  for (std::size_t i = 0; i < system.size(); ++i) {
    const auto& entry = system[i];
    names_.push_back(entry.name);
    for (Vertex x : entry.path.vertices()) {
      if (x.label < 1 || x.label > n) {
        throw Error(ErrorCode::LabelOutOfRange,
                    entry.name + " uses label " + std::to_string(x.label));
      }
    }
    for (const Edge& e : entry.path.edges()) {
      signatures_[edge_id(e)].push_back(static_cast<int>(i));
    }
  }
  // Path indices are appended in increasing order, so each list is sorted.
}

const std::vector<int>& SignatureIndex::signature_ids(const Edge& e) const {
  return signatures_[edge_id(e)];
}

std::vector<std::string> SignatureIndex::signature(const Edge& e) const {
  std::vector<std::string> out;
  for (int id : signature_ids(e)) out.push_back(names_[id]);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t SignatureIndex::edge_id(const Edge& e) const {
  if (e.v().label > n_ || e.u().label < 1) {
    throw Error(ErrorCode::LabelOutOfRange, "edge outside K_" + std::to_string(n_));
  }
  return edge_index(n_, e.u().label, e.v().label);
}

Edge SignatureIndex::edge_at(std::size_t id) const {
  int u = 1;
  std::size_t row = static_cast<std::size_t>(n_ - 1);
  while (id >= row) {
    id -= row;
    ++u;
    --row;
  }
  return Edge(u, u + 1 + static_cast<int>(id));
}

VerificationReport is_separating(const PathSystem& system, int n) {
  VerificationReport report;
  report.path_count = system.size();
  report.valid_paths = validate_paths(system, n).ok;
  if (!report.valid_paths) return report;

  const SignatureIndex index(system, n);
  const std::size_t m = index.edge_count();
  report.multiplicity_histogram.assign(system.size() + 1, 0);
  std::vector<std::pair<std::uint64_t, std::size_t>> keyed;
  keyed.reserve(m);
  for (std::size_t id = 0; id < m; ++id) {
    const auto& sig = index.signature_ids(index.edge_at(id));
    report.multiplicity_histogram[sig.size()]++;
    report.max_multiplicity = std::max(report.max_multiplicity, sig.size());
    keyed.emplace_back(hash_ids(sig), id);
  }
  std::sort(keyed.begin(), keyed.end());
  report.separating = true;
  // Equal hashes are only candidates; the exact comparison decides.
  for (std::size_t i = 0; i < keyed.size() && report.separating; ++i) {
    for (std::size_t j = i + 1; j < keyed.size() && keyed[j].first == keyed[i].first; ++j) {
      const Edge a = index.edge_at(keyed[i].second);
      const Edge b = index.edge_at(keyed[j].second);
      if (index.signature_ids(a) == index.signature_ids(b)) {
        report.separating = false;
        report.witness = std::minmax(a, b);
        break;
      }
    }
  }
  return report;
}

bool is_separating_pairwise(const PathSystem& system, int n, unsigned threads) {
  if (!validate_paths(system, n)) return false;
  const std::size_t m = pair_count(n);
  const std::size_t k = system.size();
  // membership[e * k + i] = edge e lies in path i.
  std::vector<char> membership(m * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (const Edge& e : system[i].path.edges()) {
      membership[edge_index(n, e.u().label, e.v().label) * k + i] = 1;
    }
  }
  std::atomic<bool> ok{true};
  for_each_index(m, threads, [&](std::size_t a) {
    for (std::size_t b = a + 1; b < m && ok; ++b) {
      bool split = false;
      for (std::size_t i = 0; i < k && !split; ++i) {
        split = membership[a * k + i] != membership[b * k + i];
      }
      if (!split) ok = false;
    }
  });
  return ok;
}

DecodeResult decode_fault(const SignatureIndex& index, const std::set<std::string>& failed) {
  std::vector<int> wanted;
  for (const std::string& name : failed) {
    const auto& names = index.path_names();
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw Error(ErrorCode::UnknownPathName, name);
    wanted.push_back(static_cast<int>(it - names.begin()));
  }
  std::sort(wanted.begin(), wanted.end());
  std::vector<Edge> hits;
  for (std::size_t id = 0; id < index.edge_count(); ++id) {
    const Edge e = index.edge_at(id);
    if (index.signature_ids(e) == wanted) hits.push_back(e);
  }
  if (hits.empty()) return NoMatch{};
  if (hits.size() == 1) return hits.front();
  return Ambiguous{std::move(hits)};
}

namespace {

// Edge sets of every simple path of K_n with at least one edge, one per
// reversal class, as bitmasks over edge_index().
std::vector<std::uint32_t> all_path_masks(int n) {
  std::vector<std::uint32_t> out;
  std::vector<int> path;
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  std::function<void(std::uint32_t)> grow = [&](std::uint32_t mask) {
    if (path.size() >= 2 && path.front() < path.back()) out.push_back(mask);
    for (int w = 1; w <= n; ++w) {
      if (used[w]) continue;
      const int v = path.back();
      used[w] = true;
      path.push_back(w);
      grow(mask | (1u << edge_index(n, std::min(v, w), std::max(v, w))));
      path.pop_back();
      used[w] = false;
    }
  };
  for (int s = 1; s <= n; ++s) {
    used[s] = true;
    path.push_back(s);
    grow(0);
    path.pop_back();
    used[s] = false;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool signatures_distinct(const std::vector<std::uint32_t>& chosen, int edges) {
  std::vector<std::uint32_t> sigs(static_cast<std::size_t>(edges), 0);
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    for (int e = 0; e < edges; ++e) {
      if (chosen[i] >> e & 1u) sigs[e] |= 1u << i;
    }
  }
  std::sort(sigs.begin(), sigs.end());
  return std::adjacent_find(sigs.begin(), sigs.end()) == sigs.end();
}

bool exists_separating_subset(const std::vector<std::uint32_t>& paths, int size,
                              int edges, unsigned threads) {
  if (size == 0) return edges <= 1;
  std::atomic<bool> found{false};
  // Parallelize over the first chosen path.
  for_each_index(paths.size(), threads, [&](std::size_t first) {
    if (found) return;
    std::vector<std::size_t> idx{first};
    std::vector<std::uint32_t> chosen{paths[first]};
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      if (found) return;
      if (static_cast<int>(chosen.size()) == size) {
        if (signatures_distinct(chosen, edges)) found = true;
        return;
      }
      for (std::size_t j = from; j < paths.size() && !found; ++j) {
        chosen.push_back(paths[j]);
        rec(j + 1);
        chosen.pop_back();
      }
    };
    rec(first + 1);
  });
  return found;
}

}  // namespace

std::optional<int> min_size_oracle(int n, int max_size, unsigned threads) {
  if (n > kOracleMaxN) {
    throw Error(ErrorCode::TooLarge, "oracle supports n <= " + std::to_string(kOracleMaxN));
  }
  if (n < 2) throw Error(ErrorCode::OutOfRange, "oracle needs n >= 2");
  const int edges = static_cast<int>(pair_count(n));
  const auto paths = all_path_masks(n);
  for (int k = 0; k <= max_size; ++k) {
    // k paths give at most 2^k distinct signatures.
    if (k < 31 && (1LL << k) < edges) continue;
    if (exists_separating_subset(paths, k, edges, threads)) return k;
  }
  return std::nullopt;
}

}  // namespace sepsys
