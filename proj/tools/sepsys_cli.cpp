// Command-line front end: construct, verify, decompose, genpath, decode, oracle.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sepsys/assembly.hpp"
#include "sepsys/decomposition.hpp"
#include "sepsys/error.hpp"
#include "sepsys/generating_path.hpp"
#include "sepsys/io.hpp"
#include "sepsys/verifier.hpp"

namespace {

using ordered = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  int n = 0;
  int p = 0;
  std::string strategy = "greedy_max";
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out;
  std::string in;
  std::string failed;
  int max_size = -1;
  unsigned threads = 1;
  bool force_base = false;
  bool force_construct = false;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw sepsys::Error(sepsys::ErrorCode::ParseError, "cannot write " + cfg.out);
  file << text;
  if (!text.empty() && text.back() != '\n') file << '\n';
}

std::string read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sepsys::Error(sepsys::ErrorCode::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string render_system(const sepsys::PathSystem& system, int n, const std::string& format) {
  if (format == "dot") return sepsys::system_to_dot(system, n);
  if (format == "text") return sepsys::system_to_text(system, n);
  return sepsys::system_to_json(system, n);
}

std::string render_report(const sepsys::VerificationReport& report, const std::string& format,
                          const std::string& note) {
  if (format != "text") return sepsys::report_to_json(report);
  std::ostringstream out;
  out << "paths: " << report.path_count << '\n'
      << "valid_paths: " << (report.valid_paths ? "yes" : "no") << '\n'
      << "separating: " << (report.separating ? "yes" : "no") << '\n';
  if (report.witness) {
    const auto& [a, b] = *report.witness;
    out << "witness: {" << a.u().label << "," << a.v().label << "} and {" << b.u().label
        << "," << b.v().label << "} share a signature\n";
  }
  if (!note.empty()) out << "note: " << note << '\n';
  if (report.valid_paths) out << "max multiplicity: " << report.max_multiplicity << '\n';
  return out.str();
}

int cmd_construct(const RunConfig& cfg) {
  sepsys::ConstructionOptions options;
  options.strategy = *sepsys::parse_strategy(cfg.strategy);
  options.seed = cfg.seed;
  if (cfg.force_base) options.mode = sepsys::ConstructionMode::ForceBase;
  if (cfg.force_construct) options.mode = sepsys::ConstructionMode::ForceConstruct;
  const sepsys::PathSystem system = sepsys::construct_system(cfg.n, options);

  const auto report = sepsys::is_separating(system, cfg.n);
  if (!report.valid_paths || !report.separating) {
    std::cerr << "construction for n = " << cfg.n << " failed re-verification\n";
    return kExitFailure;
  }
  std::cerr << "K" << cfg.n << ": " << system.size() << " paths, verified separating\n";
  std::cerr << "lengths:";
  for (const auto& entry : system.entries()) {
    std::cerr << ' ' << entry.name << '=' << entry.path.edge_count();
  }
  std::cerr << '\n';
  emit(cfg, render_system(system, cfg.n, cfg.format));
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  const sepsys::RawSystem raw = sepsys::parse_raw_system(read_input(cfg.in));
  const auto validation = sepsys::validate_paths(raw.paths, raw.n);
  sepsys::VerificationReport report;
  if (validation) {
    report = sepsys::is_separating(sepsys::to_path_system(raw), raw.n);
  } else {
    report.path_count = raw.paths.size();
  }
  emit(cfg, render_report(report, cfg.format, validation.first_violation));
  return report.valid_paths && report.separating ? kExitOk : kExitFailure;
}

int cmd_decompose(const RunConfig& cfg) {
  const auto d = sepsys::decompose(cfg.n, *sepsys::parse_strategy(cfg.strategy), cfg.seed);
  if (cfg.format == "text") {
    std::ostringstream out;
    out << d.n << " =";
    for (std::size_t k = 0; k < d.primes.size(); ++k) out << (k ? " + " : " ") << d.primes[k];
    out << " + " << d.b << '\n';
    emit(cfg, out.str());
  } else {
    ordered doc;
    doc["n"] = d.n;
    doc["primes"] = d.primes;
    doc["partial_sums"] = d.partial_sums;
    doc["b"] = d.b;
    emit(cfg, doc.dump());
  }
  return kExitOk;
}

int cmd_genpath(const RunConfig& cfg) {
  const sepsys::Level level(1, sepsys::Vertex{1}, sepsys::Vertex{cfg.p});
  const sepsys::GeneratingPath gp = sepsys::find_generating_path(level);
  if (!sepsys::check_generating(gp.path(), level)) return kExitFailure;
  if (cfg.format == "text") {
    std::ostringstream out;
    out << "p = " << cfg.p << ":";
    for (auto v : gp.path().vertices()) out << ' ' << v.label;
    out << "\nsigma cycles:";
    const sepsys::TypePermutation perm = sepsys::sigma(gp);
    for (const auto& cycle : perm.cycles()) {
      out << " (";
      for (std::size_t i = 0; i < cycle.size(); ++i) out << (i ? " " : "") << cycle[i];
      out << ")";
    }
    out << '\n';
    emit(cfg, out.str());
  } else {
    sepsys::PathSystem single;
    single.add("P1", gp.path());
    emit(cfg, sepsys::system_to_json(single, cfg.p));
  }
  return kExitOk;
}

int cmd_decode(const RunConfig& cfg) {
  const sepsys::SystemDocument doc = sepsys::read_system_file(cfg.in);
  std::set<std::string> failed;
  std::stringstream names(cfg.failed);
  for (std::string name; std::getline(names, name, ',');) {
    if (!name.empty()) failed.insert(name);
  }
  const sepsys::SignatureIndex index(doc.system, doc.n);
  const auto result = sepsys::decode_fault(index, failed);
  ordered out;
  int code = kExitFailure;
  if (const auto* e = std::get_if<sepsys::Edge>(&result)) {
    out["status"] = "match";
    out["edge"] = {e->u().label, e->v().label};
    code = kExitOk;
  } else if (const auto* amb = std::get_if<sepsys::Ambiguous>(&result)) {
    out["status"] = "ambiguous";
    out["edge"] = nullptr;
    ordered candidates = ordered::array();
    for (const auto& c : amb->candidates) candidates.push_back({c.u().label, c.v().label});
    out["candidates"] = candidates;
  } else {
    out["status"] = "no_match";
    out["edge"] = nullptr;
  }
  emit(cfg, out.dump());
  return code;
}

int cmd_oracle(const RunConfig& cfg) {
  const int max_size = cfg.max_size >= 0 ? cfg.max_size : cfg.n + 2;
  const auto k = sepsys::min_size_oracle(cfg.n, max_size, cfg.threads);
  ordered out;
  out["n"] = cfg.n;
  out["max_size"] = max_size;
  out["min_size"] = k ? ordered(*k) : ordered(nullptr);
  emit(cfg, out.dump());
  return k ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separating path systems of complete graphs"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::vector<std::string> strategies{"greedy_max", "greedy_min", "seeded_random"};
  const std::vector<std::string> formats{"json", "dot", "text"};
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", cfg.out, "Write output to this file instead of stdout");
    sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  };

  auto* construct = app.add_subcommand("construct", "Build a separating system for K_n");
  construct->add_option("--n", cfg.n, "Number of vertices")->required()->check(CLI::PositiveNumber);
  construct->add_option("--strategy", cfg.strategy, "Decomposition strategy")
      ->check(CLI::IsMember(strategies));
  construct->add_option("--seed", cfg.seed, "Seed for seeded_random");
  auto* fb = construct->add_flag("--force-base", cfg.force_base, "Use the stored base system");
  construct->add_flag("--force-construct", cfg.force_construct, "Use the prime-level construction")
      ->excludes(fb);
  add_common(construct);

  auto* verify = app.add_subcommand("verify", "Check a system file for weak separation");
  verify->add_option("--in", cfg.in, "System JSON file")->required();
  add_common(verify);

  auto* decompose = app.add_subcommand("decompose", "Split n into prime levels and a remainder");
  decompose->add_option("--n", cfg.n, "Number of vertices")->required();
  decompose->add_option("--strategy", cfg.strategy, "Decomposition strategy")
      ->check(CLI::IsMember(strategies));
  decompose->add_option("--seed", cfg.seed, "Seed for seeded_random");
  add_common(decompose);

  auto* genpath = app.add_subcommand("genpath", "Find a generating path of K_p");
  genpath->add_option("--p", cfg.p, "Odd prime")->required();
  add_common(genpath);

  auto* decode = app.add_subcommand("decode", "Locate the edge whose signature is the failed set");
  decode->add_option("--in", cfg.in, "System JSON file")->required();
  decode->add_option("--failed", cfg.failed, "Comma-separated names of failed paths");
  add_common(decode);

  auto* oracle = app.add_subcommand("oracle", "Exhaustive minimum system size for n <= 5");
  oracle->add_option("--n", cfg.n, "Number of vertices")->required();
  oracle->add_option("--max-size", cfg.max_size, "Largest size tried (default n + 2)");
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*decompose) return cmd_decompose(cfg);
    if (*genpath) return cmd_genpath(cfg);
    if (*decode) return cmd_decode(cfg);
    if (*oracle) return cmd_oracle(cfg);
  } catch (const sepsys::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == sepsys::ErrorCode::ParseError ? kExitUsage : kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
