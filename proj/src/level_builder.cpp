#include "sepsys/level_builder.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "sepsys/error.hpp"

namespace sepsys {

namespace {

long long mod(long long a, long long p) {
  long long r = a % p;
  return r < 0 ? r + p : r;
}

std::string label(Vertex v) { return std::to_string(v.label); }

std::string label(const Edge& e) {
  return "{" + label(e.u()) + "," + label(e.v()) + "}";
}

int count_non_one(const std::vector<int>& cycle) {
  return static_cast<int>(std::count_if(cycle.begin(), cycle.end(),
                                        [](int x) { return x != 1; }));
}

// The single level edge of type t in a bold path (P1 guarantees uniqueness).
Edge unique_level_edge(const OrientedPath& path, int t, const Level& lv) {
  std::optional<Edge> found;
  for (const Edge& e : path.edges()) {
    if (!lv.contains(e) || edge_type(e, lv) != t) continue;
    if (found) {
      throw std::logic_error("bold path holds two level edges of type " + std::to_string(t));
    }
    found = e;
  }
  if (!found) throw std::logic_error("bold path lacks a level edge of type " + std::to_string(t));
  return *found;
}

}  // namespace

int PhiAssignment::operator()(Vertex w) const { return images.at(rank(w) - 1); }

std::size_t PhiAssignment::rank(Vertex w) const {
  auto it = std::lower_bound(externals.begin(), externals.end(), w);
  if (it == externals.end() || *it != w) {
    throw Error(ErrorCode::OutOfRange, "vertex " + label(w) + " is not external");
  }
  return static_cast<std::size_t>(it - externals.begin()) + 1;
}

bool PhiAssignment::in_image(int t) const {
  return std::find(images.begin(), images.end(), t) != images.end();
}

std::optional<Vertex> PhiAssignment::preimage(int t) const {
  auto it = std::find(images.begin(), images.end(), t);
  if (it == images.end()) return std::nullopt;
  return externals[static_cast<std::size_t>(it - images.begin())];
}

PhiAssignment assign_phi(const TypePermutation& sigma, std::span<const Vertex> externals,
                         int level_index) {
  PhiAssignment phi;
  phi.level_index = level_index;
  phi.externals.assign(externals.begin(), externals.end());
  if (!std::is_sorted(phi.externals.begin(), phi.externals.end()) ||
      std::adjacent_find(phi.externals.begin(), phi.externals.end()) != phi.externals.end()) {
    throw Error(ErrorCode::OutOfRange, "externals must be strictly ascending");
  }
  const int capacity = sigma.degree() - 1;
  if (static_cast<int>(phi.externals.size()) > capacity) {
    throw Error(ErrorCode::TooManyExternals,
                std::to_string(phi.externals.size()) + " externals exceed (p - 3) / 2 = " +
                    std::to_string(capacity));
  }
  phi.images.assign(phi.externals.size(), 0);
  if (phi.externals.empty()) return phi;

  const auto& cycles = sigma.cycles();
  std::vector<bool> used(cycles.size(), false);
  // Positions 1.. of externals still unassigned; position 0 (s_k + 1) is
  // reserved for the final run.
  std::size_t next_free = 1;
  int remaining = static_cast<int>(phi.externals.size());

  auto sufficient = [&]() -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      if (!used[i] && count_non_one(cycles[i]) >= remaining) return i;
    }
    return std::nullopt;
  };

  while (!sufficient()) {
    std::size_t pick = cycles.size();
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      if (!used[i] && std::find(cycles[i].begin(), cycles[i].end(), 1) == cycles[i].end()) {
        pick = i;
        break;
      }
    }
    if (pick == cycles.size()) throw std::logic_error("assign_phi: no whole cycle left");
    used[pick] = true;
    for (int t : cycles[pick]) phi.images[next_free++] = t;
    remaining -= static_cast<int>(cycles[pick].size());
    phi.used_cycles.push_back(cycles[pick]);
  }

  const std::size_t last = *sufficient();
  used[last] = true;
  phi.last_cycle = cycles[last];
  int t = 0;
  for (int x : phi.last_cycle) {
    if (x != 1 && (t == 0 || x < t)) t = x;
  }
  phi.images[0] = t;
  for (; next_free < phi.externals.size(); ++next_free) {
    t = sigma(t);
    if (t == 1) t = sigma(t);
    phi.images[next_free] = t;
  }
  phi.c = sigma.inverse(phi.images[0]);
  phi.exception = !phi.in_image(*phi.c) && *phi.c != 1;
  return phi;
}

std::optional<std::string> check_phi(const PhiAssignment& phi, const TypePermutation& sigma) {
  const int half = sigma.degree();
  if (static_cast<int>(phi.externals.size()) > half - 1) return "too many externals";
  if (phi.images.size() != phi.externals.size()) return "images misaligned with externals";
  std::set<int> seen;
  for (int t : phi.images) {
    if (t < 2 || t > half) return "image " + std::to_string(t) + " outside [2, (p-1)/2]";
    if (!seen.insert(t).second) return "phi not injective at type " + std::to_string(t);
  }
  if (phi.externals.empty()) {
    if (phi.c || phi.exception) return "empty assignment with c or exception set";
    return std::nullopt;
  }
  // phi(s_k+1) opens the final run: the rest of the run follows it along
  // sigma, skipping 1.
  const auto& cyc = phi.last_cycle;
  if (std::find(cyc.begin(), cyc.end(), phi.images[0]) == cyc.end()) {
    return "phi(s_k+1) not in last_cycle";
  }
  const int expected_c = sigma.inverse(phi.images[0]);
  if (phi.c != expected_c) return "c != sigma^-1(phi(s_k+1))";
  const bool exception = !phi.in_image(expected_c) && expected_c != 1;
  if (phi.exception != exception) return "exception flag inconsistent";
  return std::nullopt;
}

BoldPaths build_bold_paths(const GeneratingPath& gp, const PhiAssignment& phi) {
  const Level& lv = gp.level();
  const int p = lv.size();
  std::map<std::size_t, Vertex> detour_at;  // gp edge position -> external
  for (std::size_t j = 0; j < phi.externals.size(); ++j) {
    detour_at.emplace(gp.positions_of_type(phi.images[j]).front(), phi.externals[j]);
  }
  const int shift = lv.offset(gp.path().first());
  BoldPaths out;
  out.paths.reserve(static_cast<std::size_t>(p));
  for (int i = 1; i <= p; ++i) {
    const OrientedPath rotated = rotate_path(gp.path(), (i - 1) - shift, lv);
    std::vector<Vertex> vs;
    vs.reserve(rotated.size() + detour_at.size());
    for (std::size_t pos = 0; pos < rotated.size(); ++pos) {
      vs.push_back(rotated[pos]);
      if (auto it = detour_at.find(pos); it != detour_at.end()) {
        vs.push_back(it->second);
        out.detours.push_back({i, it->second, rotated.edge(pos)});
      }
    }
    out.paths.emplace_back(std::move(vs));
  }
  return out;
}

std::set<int> edge_occurrences(const Edge& e, std::span<const OrientedPath> bold) {
  std::set<int> out;
  for (std::size_t i = 0; i < bold.size(); ++i) {
    const auto vs = bold[i].vertices();
    for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
      if (Edge(vs[k], vs[k + 1]) == e) {
        out.insert(static_cast<int>(i + 1));
        break;
      }
    }
  }
  return out;
}

std::vector<int> LevelSystem::free_types() const {
  std::vector<int> out;
  for (int t = 2; t <= level.max_type(); ++t) {
    if (!phi.in_image(t)) out.push_back(t);
  }
  return out;
}

LevelSystem start_level(const GeneratingPath& gp, std::span<const Vertex> externals) {
  TypePermutation perm = sigma(gp);
  PhiAssignment phi = assign_phi(perm, externals, gp.level().index());
  BoldPaths bold = build_bold_paths(gp, phi);
  return LevelSystem{gp.level(), gp, std::move(perm), std::move(phi), std::move(bold),
                     {}, std::nullopt, std::nullopt, std::nullopt, {}};
}

void build_R_S(LevelSystem& ls) {
  const Level& lv = ls.level;
  ls.r_paths.clear();
  for (std::size_t j = 0; j < ls.phi.externals.size(); ++j) {
    const int t = ls.phi.images[j];
    const Edge drop = unique_level_edge(ls.bold.paths.at(j), t, lv);
    ls.r_paths.push_back(type_cycle_without(t, drop, lv));
    ls.excluded.push_back({"R" + label(ls.phi.externals[j]), t, drop, ls.occurrences(drop)});
  }
  const Edge drop = unique_level_edge(ls.bold.paths.at(ls.phi.externals.size()), 1, lv);
  ls.s_path = type_cycle_without(1, drop, lv);
  ls.excluded.push_back({"S", 1, drop, ls.occurrences(drop)});
}

std::optional<Edge> incoming_connector(const LevelSystem& ls) {
  if (ls.phi.empty() || ls.r_paths.empty()) return std::nullopt;
  const Vertex entry = ls.phi.externals.front();
  return Edge(ls.R(entry).last(), entry);
}

void build_T(LevelSystem& ls, std::optional<Edge> g) {
  const Level& lv = ls.level;
  std::optional<int> t;
  if (ls.phi.exception) {
    t = ls.phi.c;
  } else if (auto free = ls.free_types(); !free.empty()) {
    t = free.front();
  }
  if (!t) {
    // Levels above the first take the incoming T connector, which must avoid lo.
    ls.t_path = OrientedPath({lv.index() == 1 ? lv.lo() : lv.hi()});
    ls.t_type.reset();
    return;
  }
  const std::vector<Edge> candidates = type_cycle(*t, lv);
  std::optional<Edge> drop;
  if (g) {
    const std::set<int> target = ls.occurrences(*g);
    for (const Edge& e : candidates) {
      if (ls.occurrences(e) == target) {
        drop = e;
        break;
      }
    }
  }
  if (!drop) drop = *std::min_element(candidates.begin(), candidates.end());
  ls.t_type = t;
  ls.t_path = type_cycle_without(*t, *drop, lv);
  ls.excluded.push_back({"T", *t, *drop, ls.occurrences(*drop)});
}

LevelSystem build_level(const GeneratingPath& gp, std::span<const Vertex> externals) {
  LevelSystem ls = start_level(gp, externals);
  build_R_S(ls);
  build_T(ls, incoming_connector(ls));
  return ls;
}

std::vector<std::string> audit_level(const LevelSystem& ls) {
  std::vector<std::string> issues;
  const Level& lv = ls.level;
  const int p = lv.size();
  const int half = lv.max_type();
  const auto& bold = ls.bold.paths;
  const auto& phi = ls.phi;
  auto fail = [&](std::string msg) {
    issues.push_back("level " + std::to_string(lv.index()) + ": " + std::move(msg));
  };
  auto special = [&](int t) { return t == 1 || phi.in_image(t); };

  if (auto bad = check_phi(phi, ls.sigma)) fail("phi: " + *bad);
  if (static_cast<int>(bold.size()) != p) {
    fail("expected p bold paths");
    return issues;
  }

  for (int i = 1; i <= p; ++i) {
    const OrientedPath& path = bold[i - 1];
    const std::string tag = "bold " + std::to_string(i);
    if (path.first() != lv.at(i - 1)) fail(tag + " does not start at s_{k-1}+i");
    for (Vertex w : phi.externals) {
      if (!path.contains(w)) fail(tag + " misses external " + label(w));
    }
    if (path.size() != static_cast<std::size_t>(p - 1) + phi.externals.size()) {
      fail(tag + " has the wrong vertex count");
    }
    std::vector<std::vector<Edge>> by_type(static_cast<std::size_t>(half + 1));
    for (const Edge& e : path.edges()) {
      if (lv.contains(e)) by_type[edge_type(e, lv)].push_back(e);
    }
    for (int t = 1; t <= half; ++t) {
      const std::size_t want = special(t) ? 1 : 2;
      if (by_type[t].size() != want) {
        fail(tag + (want == 1 ? " P1" : " P2") + ": type " + std::to_string(t) + " appears " +
             std::to_string(by_type[t].size()) + " times");
      }
      for (const Edge& e : by_type[t]) {
        if (ls.occurrences(e).size() != want) {
          fail(tag + (want == 1 ? " P1" : " P2") + ": edge " + label(e) +
               " has the wrong multiplicity");
        }
      }
    }
    // P3: two edges at each external, shared with bold i +- phi(w).
    for (Vertex w : phi.externals) {
      std::vector<Edge> at_w;
      for (const Edge& e : path.edges()) {
        if (e.incident_to(w)) at_w.push_back(e);
      }
      if (at_w.size() != 2) {
        fail(tag + " P3: " + std::to_string(at_w.size()) + " edges at " + label(w));
        continue;
      }
      const int f = phi(w);
      const std::set<int> partners{static_cast<int>(mod(i - 1 + f, p)) + 1,
                                   static_cast<int>(mod(i - 1 - f, p)) + 1};
      std::set<int> seen;
      for (const Edge& e : at_w) {
        auto occ = ls.occurrences(e);
        occ.erase(i);
        if (occ.size() != 1) {
          fail(tag + " P3: edge " + label(e) + " not in exactly two bold paths");
          continue;
        }
        seen.insert(*occ.begin());
      }
      if (seen != partners) fail(tag + " P3: partners of " + label(w) + " not at +-phi(w)");
    }
    // P4 and its single permitted exception.
    bool exception_pair_seen = false;
    for (int t = 2; t <= half; ++t) {
      if (by_type[t].size() != 2) continue;
      const int d = clockwise_distance(by_type[t][0], by_type[t][1], lv);
      for (std::size_t j = 0; j < phi.externals.size(); ++j) {
        if (phi.images[j] != d) continue;
        const bool allowed = j == 0 && phi.exception && phi.c == t;
        if (!allowed) {
          fail(tag + " P4: type " + std::to_string(t) + " pair at distance phi(" +
               label(phi.externals[j]) + ")");
        } else {
          exception_pair_seen = true;
        }
      }
    }
    if (phi.exception && !exception_pair_seen) {
      fail(tag + ": exception level without the type-c pair at distance phi(s_k+1)");
    }
  }

  // Every level-to-external edge sits in exactly two bold paths.
  for (Vertex w : phi.externals) {
    for (int x = 0; x < p; ++x) {
      const Edge e(lv.at(x), w);
      if (ls.occurrences(e).size() != 2) fail("detour coverage: " + label(e));
    }
  }
  if (ls.bold.detours.size() != phi.externals.size() * static_cast<std::size_t>(p)) {
    fail("detour registry has the wrong size");
  }

  auto check_type_path = [&](const OrientedPath& path, int t, const std::string& tag)
      -> std::optional<Edge> {
    if (static_cast<int>(path.size()) != p) {
      fail(tag + " does not span the level");
      return std::nullopt;
    }
    for (Vertex v : path.vertices()) {
      if (!lv.contains(v)) fail(tag + " leaves the level");
    }
    std::set<Edge> have;
    for (const Edge& e : path.edges()) {
      if (!lv.contains(e) || edge_type(e, lv) != t) fail(tag + " edge of the wrong type");
      have.insert(e);
    }
    std::vector<Edge> missing;
    for (const Edge& e : type_cycle(t, lv)) {
      if (!have.count(e)) missing.push_back(e);
    }
    if (missing.size() != 1) {
      fail(tag + " must miss exactly one edge of its type");
      return std::nullopt;
    }
    return missing.front();
  };

  // P5: R and S drop edges from pairwise distinct bold paths.
  if (ls.r_paths.size() != phi.externals.size() || !ls.s_path) {
    fail("R/S paths missing");
    return issues;
  }
  std::set<int> sources;
  for (std::size_t j = 0; j < phi.externals.size(); ++j) {
    const std::string tag = "R" + label(phi.externals[j]);
    if (auto drop = check_type_path(ls.r_paths[j], phi.images[j], tag)) {
      const auto occ = ls.occurrences(*drop);
      if (occ.size() != 1 || !sources.insert(*occ.begin()).second) {
        fail("P5: " + tag + " drop does not come from its own bold path");
      }
    }
  }
  if (auto drop = check_type_path(*ls.s_path, 1, "S")) {
    const auto occ = ls.occurrences(*drop);
    if (occ.size() != 1 || !sources.insert(*occ.begin()).second) {
      fail("P5: S drop does not come from its own bold path");
    }
  }

  if (!ls.t_path) {
    fail("T missing");
    return issues;
  }
  if (!ls.t_type) {
    if (ls.t_path->size() != 1) fail("trivial T must be a single vertex");
    if (phi.exception || !ls.free_types().empty()) fail("T trivial although a type is available");
  } else {
    if (phi.exception && ls.t_type != phi.c) fail("exception level with T not on type c");
    if (auto drop = check_type_path(*ls.t_path, *ls.t_type, "T")) {
      if (auto g = incoming_connector(ls); g && phi.exception) {
        if (ls.occurrences(*drop) != ls.occurrences(*g)) {
          fail("P6: T drop does not share the bold paths of " + label(*g));
        }
      }
    }
  }
  return issues;
}

}  // namespace sepsys
