#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <vector>

#include "sepsys/decomposition.hpp"
#include "sepsys/error.hpp"
#include "sepsys/generating_path.hpp"
#include "sepsys/io.hpp"
#include "sepsys/verifier.hpp"

using namespace sepsys;

namespace {

Level clique(int p) { return Level(1, Vertex{1}, Vertex{p}); }

// Independent checker working on raw offsets 0..p-1.
bool generating_by_counting(const std::vector<int>& labels, int p) {
  if (static_cast<int>(labels.size()) != p - 1) return false;
  if (std::set<int>(labels.begin(), labels.end()).size() != labels.size()) return false;
  const int h = (p - 1) / 2;
  std::map<int, std::vector<int>> starts;  // type -> start offsets
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) {
    const int a = labels[i] - 1;
    const int b = labels[i + 1] - 1;
    const int d = ((b - a) % p + p) % p;
    if (d <= h) {
      starts[d].push_back(a);
    } else {
      starts[p - d].push_back(b);
    }
  }
  if (starts[1].size() != 1) return false;
  std::set<int> distances;
  for (int t = 2; t <= h; ++t) {
    if (starts[t].size() != 2) return false;
    const int r = ((starts[t][1] - starts[t][0]) % p + p) % p;
    if (!distances.insert(std::min(r, p - r)).second) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("check_generating examples") {
  CHECK(check_generating(OrientedPath{1, 5, 2, 4}, clique(5)).ok);
  CHECK(check_generating(OrientedPath{1, 2}, clique(3)).ok);
  const GpCheck bad = check_generating(OrientedPath{1, 2, 3, 4}, clique(5));
  CHECK_FALSE(bad.ok);
  CHECK(bad.violation.rfind("GP1", 0) == 0);
  CHECK_FALSE(check_generating(OrientedPath{1, 2, 3}, clique(5)).ok);
}

TEST_CASE("zigzag paths fail the distance clause") {
  // 1, p, 2, p-1, ... has every homotypical pair at the same distance.
  for (int p : {7, 11, 13}) {
    std::vector<int> zig;
    for (int i = 0; static_cast<int>(zig.size()) < p - 1; ++i) {
      zig.push_back(1 + i);
      if (static_cast<int>(zig.size()) < p - 1) zig.push_back(p - i);
    }
    const auto res = check_generating(OrientedPath::from_labels(zig), clique(p));
    CHECK_FALSE(res.ok);
    CHECK(res.violation.rfind("GP3", 0) == 0);
    CHECK_FALSE(generating_by_counting(zig, p));
  }
}

TEST_CASE("checker agrees with the counting oracle on all paths of K_7") {
  const int p = 7;
  std::vector<int> perm{1, 2, 3, 4, 5, 6, 7};
  int accepted = 0;
  do {
    const std::vector<int> path(perm.begin(), perm.end() - 1);
    const bool expected = generating_by_counting(path, p);
    CHECK(check_generating(OrientedPath::from_labels(path), clique(p)).ok == expected);
    accepted += expected;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(accepted > 0);
}

TEST_CASE("found generating paths pass both checkers up to 199") {
  for (int p = 3; p < 200; p += 2) {
    if (!is_prime(static_cast<std::uint64_t>(p))) continue;
    const GeneratingPath gp = find_generating_path(clique(p));
    CHECK(gp.path().first() == Vertex{1});
    CHECK(generating_by_counting(gp.path().labels(), p));
  }
}

TEST_CASE("geometric family covers primes where depth-first search is slow") {
  for (int p : {101, 211, 401, 599, 997}) {
    const auto offs = geometric_generating_offsets(p);
    REQUIRE(offs.has_value());
    std::vector<int> labels;
    for (int o : *offs) labels.push_back(o + 1);
    CHECK(generating_by_counting(labels, p));
  }
}

TEST_CASE("dfs returns empty when the budget runs out") {
  CHECK_FALSE(dfs_generating_offsets(97, 10).has_value());
  const auto small = dfs_generating_offsets(5, kDefaultDfsBudget);
  REQUIRE(small.has_value());
  CHECK(small->front() == 0);
}

TEST_CASE("generating paths stay generating under rotation") {
  for (int p : {5, 7, 11, 13, 17, 23}) {
    const Level lv = clique(p);
    const GeneratingPath gp = find_generating_path(lv);
    for (int r = 0; r < p; ++r) CHECK(check_generating(rotate_path(gp.path(), r, lv), lv).ok);
  }
}

TEST_CASE("generating path on a shifted level") {
  const Level lv(2, Vertex{12}, Vertex{18});
  const GeneratingPath gp = find_generating_path(lv);
  CHECK(gp.path().first() == Vertex{12});
  CHECK(check_generating(gp.path(), lv).ok);
}

TEST_CASE("GeneratingPath rejects non-generating input") {
  CHECK_THROWS_AS(GeneratingPath(clique(5), OrientedPath{1, 2, 3, 4}), Error);
}

TEST_CASE("sigma of (1,5,2,4) is the identity") {
  const GeneratingPath gp(clique(5), OrientedPath{1, 5, 2, 4});
  const TypePermutation s = sigma(gp);
  CHECK(s(1) == 1);
  CHECK(s(2) == 2);
  CHECK(s.is_identity());
  CHECK(gp.positions_of_type(2) == std::vector<std::size_t>{1, 2});
}

TEST_CASE("sigma is a permutation whose value at 1 is the unused distance") {
  for (int p : {7, 11, 13, 19, 31, 43}) {
    const Level lv = clique(p);
    const GeneratingPath gp = find_generating_path(lv);
    const TypePermutation s = sigma(gp);
    std::set<int> image;
    for (int t = 1; t <= lv.max_type(); ++t) {
      image.insert(s(t));
      CHECK(s.inverse(s(t)) == t);
    }
    CHECK(static_cast<int>(image.size()) == lv.max_type());
    std::set<int> used;
    for (int t = 2; t <= lv.max_type(); ++t) {
      const auto& pos = gp.positions_of_type(t);
      used.insert(clockwise_distance(gp.path().edge(pos[0]), gp.path().edge(pos[1]), lv));
    }
    CHECK(used.count(s(1)) == 0);
    std::size_t total = 0;
    for (const auto& cyc : s.cycles()) {
      CHECK(cyc.front() == *std::min_element(cyc.begin(), cyc.end()));
      total += cyc.size();
    }
    CHECK(total == static_cast<std::size_t>(lv.max_type()));
  }
}

TEST_CASE("TypePermutation cycles are canonical") {
  const TypePermutation s(11, {3, 1, 2, 5, 4});
  REQUIRE(s.cycles().size() == 2);
  CHECK(s.cycles()[0] == std::vector<int>{1, 3, 2});
  CHECK(s.cycles()[1] == std::vector<int>{4, 5});
  CHECK_FALSE(s.is_identity());
}

TEST_CASE("rotation system examples") {
  const GeneratingPath gp(clique(5), OrientedPath{1, 5, 2, 4});
  const PathSystem rs = rotation_system(gp);
  REQUIRE(rs.size() == 5);
  CHECK(rs[0].name == "P1");
  CHECK(rs[0].path == OrientedPath{1, 5, 2, 4});
  CHECK(rs[1].path == OrientedPath{2, 1, 3, 5});
  CHECK(is_separating(rs, 5).separating);
}

TEST_CASE("generating-path cache directory is written on a miss") {
  const std::filesystem::path dir = std::filesystem::path(SEPSYS_TEST_TMP) / "gp_cache_write";
  std::filesystem::remove_all(dir);
  ::setenv("SEPSYS_CACHE", dir.c_str(), 1);
  // 227 is not requested anywhere else in this binary.
  const GeneratingPath gp = find_generating_path(clique(227));
  ::unsetenv("SEPSYS_CACHE");
  CHECK(check_generating(gp.path(), clique(227)).ok);
  REQUIRE(std::filesystem::exists(dir / "gp_227.json"));
  const SystemDocument doc = read_system_file(dir / "gp_227.json");
  CHECK(doc.n == 227);
  REQUIRE(doc.system.size() == 1);
  CHECK(doc.system[0].path == gp.path());
}
