// dgh — command-line front end over the shared-library C API.
//
// Exit codes: 0 success, 1 failed checks or fixture mismatches, 2 usage
// errors, 3 invalid input or computation errors.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dgh.h"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvalid = 3;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void bail(int code, const std::string& message) { throw CliError{code, message}; }

void require_ok(dgh_status status) {
  if (status != DGH_OK) bail(kExitInvalid, dgh_last_error());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bail(kExitInvalid, "cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string dir_of(const std::string& path) {
  return std::filesystem::path(path).parent_path().string();
}

struct OwnedString {
  char* value = nullptr;
  ~OwnedString() { dgh_string_free(value); }
  std::string str() const { return value ? value : ""; }
};

struct Digraph {
  dgh_digraph* handle = nullptr;
  ~Digraph() { dgh_digraph_free(handle); }
  static Digraph load(const std::string& path) {
    Digraph g;
    require_ok(dgh_digraph_parse(read_file(path).c_str(), dir_of(path).c_str(), &g.handle));
    return g;
  }
  Digraph() = default;
  Digraph(Digraph&& other) noexcept : handle(other.handle) { other.handle = nullptr; }
  Digraph& operator=(Digraph&& other) noexcept {
    std::swap(handle, other.handle);
    return *this;
  }
  Digraph(const Digraph&) = delete;
};

struct Map {
  dgh_map* handle = nullptr;
  ~Map() { dgh_map_free(handle); }
  static Map load(const std::string& path) {
    Map f;
    require_ok(dgh_map_parse(read_file(path).c_str(), dir_of(path).c_str(), &f.handle));
    return f;
  }
  Map() = default;
  Map(Map&& other) noexcept : handle(other.handle) { other.handle = nullptr; }
  Map& operator=(Map&& other) noexcept {
    std::swap(handle, other.handle);
    return *this;
  }
  Map(const Map&) = delete;
};

// Named inputs of one invocation; names stay unique and every object was
// validated on load.
struct Workspace {
  std::map<std::string, Digraph> digraphs;
  std::map<std::string, Map> maps;

  dgh_digraph* digraph(const std::string& name, const std::string& path) {
    auto [it, inserted] = digraphs.try_emplace(name, Digraph{});
    if (inserted) it->second = Digraph::load(path);
    return it->second.handle;
  }
  dgh_map* map(const std::string& name, const std::string& path) {
    auto [it, inserted] = maps.try_emplace(name, Map{});
    if (inserted) it->second = Map::load(path);
    return it->second.handle;
  }
};

int g_indent = 2;

void emit(const std::string& text) {
  std::cout << text;
  if (!text.empty() && text.back() != '\n') std::cout << '\n';
}

std::string options_json(const std::vector<std::string>& overrides) {
  if (overrides.empty()) return "";
  json table = json::object();
  for (const auto& entry : overrides) {
    auto eq = entry.find('=');
    if (eq == std::string::npos) bail(kExitUsage, "--gh-override expects VERTEX=PREIMAGE");
    table[entry.substr(0, eq)] = entry.substr(eq + 1);
  }
  return json{{"gh_override", table}}.dump();
}

// --- figures: regenerate the figure fixtures and diff them -----------------

struct Fixture {
  std::string file;
  std::string text;
};

std::vector<Fixture> figure_fixtures(const std::string& dir) {
  Workspace ws;
  std::vector<Fixture> out;
  auto slash = [&](const std::string& name) { return dir + "/" + name; };

  auto pick = [&](const std::string& built, const char* key) {
    json doc = json::parse(built);
    if (!doc.contains(key)) bail(kExitInvalid, std::string("missing '") + key + "' in build result");
    return doc.at(key).dump(g_indent) + "\n";
  };

  dgh_map* fig1 = ws.map("fig1", slash("fig1_map.json"));
  std::string override_c = json{{"gh_override", {{"1", "c"}}}}.dump();

  OwnedString cylinder;
  require_ok(dgh_build("mod-cylinder", nullptr, nullptr, fig1, nullptr, nullptr, g_indent,
                       &cylinder.value));
  out.push_back({"fig1_modified_cylinder.json", pick(cylinder.str(), "result")});

  OwnedString mcone;
  require_ok(dgh_build("mod-cone", nullptr, nullptr, fig1, nullptr, override_c.c_str(), g_indent,
                       &mcone.value));
  out.push_back({"fig1_modified_cone.json", pick(mcone.str(), "result")});

  OwnedString cone;
  require_ok(dgh_build("mod-mapping-cone", nullptr, nullptr, fig1, nullptr, override_c.c_str(),
                       g_indent, &cone.value));
  out.push_back({"fig1_mapping_cone.json", pick(cone.str(), "result")});
  {
    json doc = json::parse(cone.str());
    out.push_back({"fig1_overlap.json", doc.at("parts").at("overlap").dump(g_indent) + "\n"});
  }

  dgh_map* fig2f = ws.map("fig2f", slash("fig2_map_f.json"));
  dgh_map* fig2g = ws.map("fig2g", slash("fig2_map_g.json"));
  OwnedString tube;
  require_ok(
      dgh_build("tube", nullptr, nullptr, fig2f, fig2g, nullptr, g_indent, &tube.value));
  out.push_back({"fig2_tube.json", pick(tube.str(), "result")});

  dgh_digraph* sg = ws.digraph("sg", slash("suspension_g.json"));
  dgh_digraph* sh = ws.digraph("sh", slash("suspension_h.json"));
  OwnedString s;
  require_ok(dgh_build("s-digraph", sg, sh, nullptr, nullptr, nullptr, g_indent, &s.value));
  out.push_back({"suspension_s.json", pick(s.str(), "result")});
  out.push_back({"suspension_cone.json", pick(s.str(), "cone")});
  return out;
}

int run_figures(const std::string& dir, bool write) {
  std::vector<Fixture> fixtures = figure_fixtures(dir);
  int mismatches = 0;
  for (const auto& fixture : fixtures) {
    std::string path = dir + "/" + fixture.file;
    if (write) {
      std::ofstream outfile(path, std::ios::binary);
      outfile << fixture.text;
      std::cout << "wrote " << path << "\n";
      continue;
    }
    std::ifstream infile(path, std::ios::binary);
    std::ostringstream existing;
    existing << infile.rdbuf();
    if (!infile || existing.str() != fixture.text) {
      std::cout << "mismatch " << path << "\n";
      ++mismatches;
    } else {
      std::cout << "ok " << path << "\n";
    }
  }
  return mismatches ? kExitCheckFailed : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact homotopy and integer path cohomology for finite digraphs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--json-indent", g_indent, "indentation for JSON output (-1 = compact)")
      ->capture_default_str();

  Workspace ws;
  std::string digraph_path, digraph2_path, map_path, map2_path, homotopy_path, sub_path;
  std::vector<std::string> gh_overrides;
  std::uint64_t budget = 1000000;
  std::uint64_t seed = 1;
  int pmax = 3, count = 10, size = 6, degree = 1;
  bool decompose = false;

  // build
  auto* build = app.add_subcommand("build", "run a construction and print its documents");
  std::string kind;
  build->add_option("kind", kind, "cone|cylinder|mod-cylinder|mod-cone|mod-mapping-cone|tube|s-digraph")
      ->required();
  build->add_option("--digraph", digraph_path, "digraph document (cone, s-digraph)");
  build->add_option("--digraph2", digraph2_path, "second digraph document (s-digraph)");
  build->add_option("--map", map_path, "map document (cylinders, cones, tube)");
  build->add_option("--map2", map2_path, "second map document (tube)");
  build->add_option("--gh-override", gh_overrides, "section choice VERTEX=PREIMAGE")
      ->take_all();
  build->add_flag("--decompose", decompose, "also decompose the tube into its two parts");

  // homology / cohomology / induced
  auto* hom = app.add_subcommand("homology", "path homology groups");
  auto* cohom = app.add_subcommand("cohomology", "path cohomology groups");
  for (auto* cmd : {hom, cohom}) {
    cmd->add_option("--digraph", digraph_path)->required();
    cmd->add_option("--pmax", pmax, "top degree")->capture_default_str();
  }
  auto* induced = app.add_subcommand("induced", "induced cochain maps of a digraph map");
  induced->add_option("--map", map_path)->required();
  induced->add_option("--pmax", pmax)->capture_default_str();

  // homotopy queries
  auto* homotopic = app.add_subcommand("homotopic", "decide homotopy of two parallel maps");
  homotopic->add_option("--map", map_path)->required();
  homotopic->add_option("--map2", map2_path)->required();
  homotopic->add_option("--budget", budget)->capture_default_str();

  auto* contractible = app.add_subcommand("contractible", "decide contractibility");
  contractible->add_option("--digraph", digraph_path)->required();
  contractible->add_option("--budget", budget)->capture_default_str();

  auto* equivalent = app.add_subcommand("equivalent", "search for a homotopy equivalence");
  equivalent->add_option("--digraph", digraph_path)->required();
  equivalent->add_option("--digraph2", digraph2_path)->required();
  equivalent->add_option("--budget", budget)->capture_default_str();

  auto* verify_h = app.add_subcommand("verify-homotopy", "check a homotopy certificate");
  verify_h->add_option("--homotopy", homotopy_path)->required();

  auto* hep = app.add_subcommand("hep-check", "search for a homotopy extension");
  hep->add_option("--map", map_path, "map out of the ambient digraph")->required();
  hep->add_option("--sub", sub_path, "subdigraph document")->required();
  hep->add_option("--homotopy", homotopy_path, "homotopy on the subdigraph")->required();

  // verification suites
  auto* verify = app.add_subcommand("verify", "run the property checks");
  std::string check;
  verify->add_option("check", check, "all|triviality|additivity|mv|cochain|cone|four-term|tube")
      ->required();
  verify->add_option("--seed", seed)->capture_default_str();
  verify->add_option("--count", count)->capture_default_str();
  verify->add_option("--size", size, "largest instance vertex count")->capture_default_str();
  verify->add_option("--degree", degree, "cohomology degree; 2 is experimental, not normative")
      ->capture_default_str();

  // figures
  auto* figures = app.add_subcommand("figures", "regenerate figure fixtures and diff them");
  std::string fixtures_dir = "fixtures";
  bool write = false;
  figures->add_option("--dir", fixtures_dir)->capture_default_str();
  figures->add_flag("--write", write, "rewrite the fixture files");

  // DOT
  auto* import_dot = app.add_subcommand("import-dot", "convert DOT input to a digraph document");
  std::string dot_path;
  import_dot->add_option("file", dot_path)->required();
  auto* export_dot = app.add_subcommand("export-dot", "print a digraph as DOT");
  export_dot->add_option("--digraph", digraph_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (build->parsed()) {
      const bool wants_tube_parts = decompose && kind == "tube";
      std::string build_kind = wants_tube_parts ? "tube-decomposition" : kind;
      dgh_digraph* g = digraph_path.empty() ? nullptr : ws.digraph("g", digraph_path);
      dgh_digraph* h = digraph2_path.empty() ? nullptr : ws.digraph("h", digraph2_path);
      dgh_map* f = map_path.empty() ? nullptr : ws.map("f", map_path);
      dgh_map* f2 = map2_path.empty() ? nullptr : ws.map("f2", map2_path);
      std::string options = options_json(gh_overrides);
      OwnedString result;
      require_ok(dgh_build(build_kind.c_str(), g, h, f, f2,
                           options.empty() ? nullptr : options.c_str(), g_indent, &result.value));
      emit(result.str());
    } else if (hom->parsed() || cohom->parsed()) {
      OwnedString result;
      require_ok(dgh_homology(ws.digraph("g", digraph_path), pmax, cohom->parsed() ? 1 : 0,
                              g_indent, &result.value));
      emit(result.str());
    } else if (induced->parsed()) {
      OwnedString result;
      require_ok(dgh_induced(ws.map("f", map_path), pmax, g_indent, &result.value));
      emit(result.str());
    } else if (homotopic->parsed()) {
      OwnedString result;
      require_ok(dgh_homotopic(ws.map("f", map_path), ws.map("g", map2_path), budget, g_indent,
                               &result.value));
      emit(result.str());
    } else if (contractible->parsed()) {
      OwnedString result;
      require_ok(
          dgh_contractible(ws.digraph("g", digraph_path), budget, g_indent, &result.value));
      emit(result.str());
    } else if (equivalent->parsed()) {
      OwnedString result;
      require_ok(dgh_equivalent(ws.digraph("g", digraph_path), ws.digraph("h", digraph2_path),
                                budget, g_indent, &result.value));
      emit(result.str());
    } else if (verify_h->parsed()) {
      OwnedString result;
      require_ok(dgh_verify_homotopy(read_file(homotopy_path).c_str(),
                                     dir_of(homotopy_path).c_str(), g_indent, &result.value));
      emit(result.str());
    } else if (hep->parsed()) {
      json request;
      request["map"] = json::parse(read_file(map_path));
      request["sub"] = json::parse(read_file(sub_path));
      request["homotopy"] = json::parse(read_file(homotopy_path));
      OwnedString result;
      require_ok(dgh_hep_search(request.dump().c_str(), dir_of(map_path).c_str(), g_indent,
                                &result.value));
      emit(result.str());
    } else if (verify->parsed()) {
      int failures = 0;
      OwnedString report;
      require_ok(dgh_verify(check.c_str(), seed, count, 3, size, degree, &failures,
                            &report.value));
      std::cout << report.str();
      return failures ? kExitCheckFailed : 0;
    } else if (figures->parsed()) {
      return run_figures(fixtures_dir, write);
    } else if (import_dot->parsed()) {
      OwnedString result;
      require_ok(dgh_import_dot(read_file(dot_path).c_str(), g_indent, &result.value));
      emit(result.str());
    } else if (export_dot->parsed()) {
      OwnedString result;
      require_ok(dgh_export_dot(ws.digraph("g", digraph_path), &result.value));
      std::cout << result.str();
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return 0;
}
