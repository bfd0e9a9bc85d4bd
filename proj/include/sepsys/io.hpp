#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "sepsys/graph.hpp"
#include "sepsys/verifier.hpp"

namespace sepsys {

// System schema:  {"n": int, "paths": [{"name": str, "vertices": [int, ...]}, ...]}
// Report schema:  {"valid_paths": bool, "separating": bool,
//                  "witness": [[u,v],[u,v]] | null, "path_count": int}

struct RawSystem {
  int n = 0;
  std::vector<RawPath> paths;
};

struct SystemDocument {
  int n = 0;
  PathSystem system;
};

RawSystem parse_raw_system(std::string_view json);
/// Throws InvalidPath / DuplicateName when a raw entry is not a simple path.
PathSystem to_path_system(const RawSystem& raw);

SystemDocument read_system_file(const std::filesystem::path& file);
void write_system_file(const std::filesystem::path& file, const PathSystem& system, int n);

std::string system_to_json(const PathSystem& system, int n);
std::string system_to_dot(const PathSystem& system, int n);
std::string system_to_text(const PathSystem& system, int n);
std::string report_to_json(const VerificationReport& report);

}  // namespace sepsys
