#pragma once

// JSON document formats used by the CLI, the C API and the fixtures:
//
//   digraph   {"vertices": ["a","b"], "edges": [["a","b"]]}
//   map       {"domain": <digraph|path>, "codomain": <digraph|path>,
//              "map": {"a": "0"}}
//   homotopy  {"domain": ..., "codomain": ..., "word": "-+",
//              "frames": [{"a":"0", ...}, ...]}
//
// Where <digraph|path> is either an inline digraph document or a string
// naming a JSON file (resolved against base_dir).  Serialization is
// canonical: keys sorted, vertices and edges in the digraph's own order.

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "dgh/digraph.hpp"
#include "dgh/homotopy.hpp"

namespace dgh {

nlohmann::json digraph_to_json(const Digraph& g);
Digraph digraph_from_json(const nlohmann::json& doc);

nlohmann::json map_to_json(const DigraphMap& f);
DigraphMap map_from_json(const nlohmann::json& doc, const std::string& base_dir = "");

nlohmann::json homotopy_to_json(const Homotopy& h);
Homotopy homotopy_from_json(const nlohmann::json& doc, const std::string& base_dir = "");

// Parse helpers taking raw text; throw Error(Errc::parse) on bad JSON.
Digraph digraph_from_text(const std::string& text, const std::string& base_dir = "");
DigraphMap map_from_text(const std::string& text, const std::string& base_dir = "");
Homotopy homotopy_from_text(const std::string& text, const std::string& base_dir = "");

// indent < 0 gives compact output; otherwise pretty-printed with a trailing
// newline (the fixture format).
std::string dump_json(const nlohmann::json& doc, int indent);

std::string read_file(const std::string& path);

// Minimal DOT support: directed edges only, loops and repeated edges are
// rejected, attributes and subgraph structure are not understood.
Digraph import_dot(const std::string& text);
std::string export_dot(const Digraph& g, const std::string& name = "G");

}  // namespace dgh
