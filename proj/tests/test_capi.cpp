// Exercises the shared library strictly through its C surface.

#include <cstring>
#include <string>

#include "dgh.h"
#include "doctest.h"

namespace {

struct OwnedString {
  char* value = nullptr;
  ~OwnedString() { dgh_string_free(value); }
  std::string str() const { return value ? value : ""; }
};

struct OwnedDigraph {
  dgh_digraph* value = nullptr;
  ~OwnedDigraph() { dgh_digraph_free(value); }
};

struct OwnedMap {
  dgh_map* value = nullptr;
  ~OwnedMap() { dgh_map_free(value); }
};

const char* kLine = R"({"vertices": ["a","b","c"], "edges": [["a","b"],["b","c"]]})";
const char* kSquare =
    R"({"vertices": ["0","1","2","3"], "edges": [["0","1"],["1","2"],["2","3"],["3","0"]]})";

std::string fig_map_doc() {
  return std::string(R"({"domain": )") + kLine + R"(, "codomain": )" + kSquare +
         R"(, "map": {"a":"0","b":"1","c":"1"}})";
}

}  // namespace

TEST_CASE("version and error reporting") {
  CHECK(std::strcmp(dgh_version(), "0.1.0") == 0);

  OwnedDigraph g;
  CHECK(dgh_digraph_parse("{", nullptr, &g.value) == DGH_ERR_PARSE);
  CHECK(std::strlen(dgh_last_error()) > 0);

  CHECK(dgh_digraph_parse(R"({"vertices":["a"],"edges":[["a","a"]]})", nullptr, &g.value) ==
        DGH_ERR_INVALID);
}

TEST_CASE("digraph handles") {
  OwnedDigraph g;
  REQUIRE(dgh_digraph_parse(kLine, nullptr, &g.value) == DGH_OK);
  CHECK(dgh_digraph_vertex_count(g.value) == 3);
  CHECK(dgh_digraph_edge_count(g.value) == 2);

  OwnedString json;
  REQUIRE(dgh_digraph_json(g.value, -1, &json.value) == DGH_OK);
  OwnedDigraph round;
  REQUIRE(dgh_digraph_parse(json.value, nullptr, &round.value) == DGH_OK);
  CHECK(dgh_digraph_equal(g.value, round.value) == 1);
}

TEST_CASE("build and homology through the C surface") {
  OwnedMap f;
  REQUIRE(dgh_map_parse(fig_map_doc().c_str(), nullptr, &f.value) == DGH_OK);

  OwnedString cone;
  REQUIRE(dgh_build("mod-mapping-cone", nullptr, nullptr, f.value, nullptr, nullptr, -1,
                    &cone.value) == DGH_OK);
  CHECK(cone.str().find("\"result\"") != std::string::npos);

  OwnedDigraph square;
  REQUIRE(dgh_digraph_parse(kSquare, nullptr, &square.value) == DGH_OK);
  OwnedString groups;
  REQUIRE(dgh_homology(square.value, 1, 1, -1, &groups.value) == DGH_OK);
  CHECK(groups.str().find("\"rank\":1") != std::string::npos);

  OwnedString unknown;
  CHECK(dgh_build("no-such-thing", nullptr, nullptr, f.value, nullptr, nullptr, -1,
                  &unknown.value) == DGH_ERR_PARSE);
}

TEST_CASE("homotopy queries through the C surface") {
  OwnedDigraph square;
  REQUIRE(dgh_digraph_parse(kSquare, nullptr, &square.value) == DGH_OK);
  OwnedString verdict;
  REQUIRE(dgh_contractible(square.value, 1000000, -1, &verdict.value) == DGH_OK);
  CHECK(verdict.str().find("not_homotopic") != std::string::npos);

  std::string constant_homotopy = std::string(R"({"domain": )") + kLine + R"(, "codomain": )" +
                                  kLine +
                                  R"(, "word": "+", "frames": [
                                    {"a":"a","b":"b","c":"c"},
                                    {"a":"a","b":"b","c":"c"}]})";
  OwnedString result;
  REQUIRE(dgh_verify_homotopy(constant_homotopy.c_str(), nullptr, -1, &result.value) == DGH_OK);
  CHECK(result.str().find("\"valid\":true") != std::string::npos);
}

TEST_CASE("induced maps and equivalence through the C surface") {
  OwnedMap f;
  REQUIRE(dgh_map_parse(fig_map_doc().c_str(), nullptr, &f.value) == DGH_OK);
  OwnedString induced;
  REQUIRE(dgh_induced(f.value, 1, -1, &induced.value) == DGH_OK);
  CHECK(induced.str().find("\"matrix\"") != std::string::npos);

  OwnedDigraph line, point;
  REQUIRE(dgh_digraph_parse(kLine, nullptr, &line.value) == DGH_OK);
  REQUIRE(dgh_digraph_parse(R"({"vertices":["z"],"edges":[]})", nullptr, &point.value) == DGH_OK);
  OwnedString verdict;
  REQUIRE(dgh_equivalent(line.value, point.value, 1000000, -1, &verdict.value) == DGH_OK);
  CHECK(verdict.str().find("\"equivalent\"") != std::string::npos);  // a line contracts

  OwnedString mcone;
  const char* override_json = R"({"gh_override": {"1": "c"}})";
  REQUIRE(dgh_build("mod-cone", nullptr, nullptr, f.value, nullptr, override_json, -1,
                    &mcone.value) == DGH_OK);
  CHECK(mcone.str().find("\"choices\":{\"1\":\"c\"}") != std::string::npos);
  CHECK(mcone.str().find("\"apex\":\"*\"") != std::string::npos);
}

TEST_CASE("verification suite through the C surface") {
  int failures = -1;
  OwnedString report;
  REQUIRE(dgh_verify("triviality", 7, 1, 3, 4, 1, &failures, &report.value) == DGH_OK);
  CHECK(failures == 0);
  CHECK(report.str().find("\"summary\"") != std::string::npos);
}

TEST_CASE("dot through the C surface") {
  OwnedString digraph_json;
  REQUIRE(dgh_import_dot("digraph { a -> b; }", -1, &digraph_json.value) == DGH_OK);
  OwnedDigraph g;
  REQUIRE(dgh_digraph_parse(digraph_json.value, nullptr, &g.value) == DGH_OK);
  OwnedString dot;
  REQUIRE(dgh_export_dot(g.value, &dot.value) == DGH_OK);
  CHECK(dot.str().find("\"a\" -> \"b\"") != std::string::npos);
}
