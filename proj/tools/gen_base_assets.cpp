// Regenerates data/base_systems: one K<b>.json per b plus manifest.json.
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sepsys/base_systems.hpp"
#include "sepsys/decomposition.hpp"
#include "sepsys/error.hpp"
#include "sepsys/io.hpp"
#include "sepsys/verifier.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generate the K_b base path systems"};
  std::filesystem::path out_dir = "data/base_systems";
  std::uint64_t first_seed = 1;
  int max_seeds = 50;
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--seed", first_seed, "First seed tried for searched systems");
  app.add_option("--max-seeds", max_seeds, "Seeds tried per b before giving up");
  CLI11_PARSE(app, argc, argv);

  std::filesystem::create_directories(out_dir);
  nlohmann::ordered_json manifest;
  for (int b = 1; b <= sepsys::kMaxBase; ++b) {
    sepsys::PathSystem system;
    sepsys::Provenance provenance = sepsys::Provenance::Trivial;
    std::uint64_t used_seed = 0;
    if (b == 1) {
      // K1 has no edges.
    } else if (b == 2) {
      system = sepsys::search_base_system(2, 1, 0);
    } else if (b % 2 == 1 && sepsys::is_prime(static_cast<std::uint64_t>(b))) {
      system = sepsys::search_base_system(b, b, 0);
      provenance = sepsys::Provenance::Rotation;
    } else {
      provenance = sepsys::Provenance::Searched;
      bool done = false;
      for (int i = 0; i < max_seeds && !done; ++i) {
        used_seed = first_seed + static_cast<std::uint64_t>(i);
        try {
          system = sepsys::search_base_system(b, b, used_seed, {20, 400'000});
          done = true;
        } catch (const sepsys::Error& e) {
          std::cerr << "K" << b << " seed " << used_seed << ": " << e.what() << '\n';
        }
      }
      if (!done) return 1;
    }
    if (!sepsys::is_separating(system, b).separating && b > 1) {
      std::cerr << "K" << b << ": result does not verify\n";
      return 1;
    }
    sepsys::write_system_file(out_dir / ("K" + std::to_string(b) + ".json"), system, b);
    manifest[std::to_string(b)] = {{"provenance", std::string(sepsys::to_string(provenance))},
                                   {"seed", used_seed}};
    std::cout << "K" << b << ": " << system.size() << " paths ("
              << sepsys::to_string(provenance) << ")\n";
  }
  std::ofstream(out_dir / "manifest.json") << manifest.dump(2) << '\n';
  return 0;
}
