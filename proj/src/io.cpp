#include "sepsys/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sepsys/error.hpp"

namespace sepsys {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

ordered system_json(const PathSystem& system, int n) {
  ordered paths = ordered::array();
  for (const auto& entry : system.entries()) {
    paths.push_back({{"name", entry.name}, {"vertices", entry.path.labels()}});
  }
  return {{"n", n}, {"paths", std::move(paths)}};
}

}  // namespace

RawSystem parse_raw_system(std::string_view text) {
  try {
    const json doc = json::parse(text);
    RawSystem raw;
    raw.n = doc.at("n").get<int>();
    for (const auto& p : doc.at("paths")) {
      raw.paths.push_back(
          {p.at("name").get<std::string>(), p.at("vertices").get<std::vector<int>>()});
    }
    return raw;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

PathSystem to_path_system(const RawSystem& raw) {
  PathSystem system;
  for (const RawPath& p : raw.paths) {
    system.add(p.name, OrientedPath::from_labels(p.vertices));
  }
  return system;
}

SystemDocument read_system_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + file.string());
  std::stringstream buf;
  buf << in.rdbuf();
  RawSystem raw = parse_raw_system(buf.str());
  return {raw.n, to_path_system(raw)};
}

void write_system_file(const std::filesystem::path& file, const PathSystem& system, int n) {
  std::ofstream out(file);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + file.string());
  out << system_to_json(system, n) << '\n';
}

std::string system_to_json(const PathSystem& system, int n) {
  return system_json(system, n).dump();
}

std::string system_to_dot(const PathSystem& system, int n) {
  static constexpr const char* kPalette[] = {
      "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
      "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  std::ostringstream out;
  out << "graph K" << n << " {\n";
  for (int v = 1; v <= n; ++v) out << "  " << v << ";\n";
  for (std::size_t i = 0; i < system.size(); ++i) {
    const auto& entry = system[i];
    const char* color = kPalette[i % std::size(kPalette)];
    for (const Edge& e : entry.path.edges()) {
      out << "  " << e.u().label << " -- " << e.v().label << " [color=\"" << color
          << "\", label=\"" << entry.name << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string system_to_text(const PathSystem& system, int n) {
  std::ostringstream out;
  out << "K" << n << ": " << system.size() << " paths\n";
  for (const auto& entry : system.entries()) {
    out << entry.name << " (" << entry.path.edge_count() << " edges):";
    for (Vertex v : entry.path.vertices()) out << ' ' << v.label;
    out << '\n';
  }
  return out.str();
}

std::string report_to_json(const VerificationReport& report) {
  ordered doc;
  doc["valid_paths"] = report.valid_paths;
  doc["separating"] = report.separating;
  if (report.witness) {
    const auto& [a, b] = *report.witness;
    doc["witness"] = ordered::array({ordered::array({a.u().label, a.v().label}),
                                     ordered::array({b.u().label, b.v().label})});
  } else {
    doc["witness"] = nullptr;
  }
  doc["path_count"] = report.path_count;
  return doc.dump();
}

}  // namespace sepsys
