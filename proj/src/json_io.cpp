#include "dgh/json_io.hpp"

#include <cctype>
#include <set>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dgh {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io, "cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

static json parse_text(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) fail(Errc::parse, "malformed JSON");
  return doc;
}

nlohmann::json digraph_to_json(const Digraph& g) {
  json doc;
  doc["vertices"] = g.labels();
  json edges = json::array();
  for (const auto& [from, to] : g.edge_labels()) edges.push_back(json::array({from, to}));
  doc["edges"] = std::move(edges);
  return doc;
}

Digraph digraph_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    fail(Errc::parse, "digraph document needs \"vertices\" and \"edges\"");
  std::vector<std::string> labels;
  for (const auto& v : doc.at("vertices")) {
    if (!v.is_string()) fail(Errc::parse, "vertex labels must be strings");
    labels.push_back(v.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : doc.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      fail(Errc::parse, "edges must be [from, to] label pairs");
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return Digraph(std::move(labels), std::move(edges));
}

// A digraph position in a larger document: inline object or file reference.
static Digraph digraph_from_ref(const json& node, const std::string& base_dir) {
  if (node.is_string()) {
    std::filesystem::path p = node.get<std::string>();
    if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
    return digraph_from_json(parse_text(read_file(p.string())));
  }
  return digraph_from_json(node);
}

nlohmann::json map_to_json(const DigraphMap& f) {
  json doc;
  doc["domain"] = digraph_to_json(f.domain());
  doc["codomain"] = digraph_to_json(f.codomain());
  json assignment = json::object();
  for (VertexId v = 0; v < f.domain().vertex_count(); ++v)
    assignment[f.domain().label(v)] = f.codomain().label(f(v));
  doc["map"] = std::move(assignment);
  return doc;
}

static std::map<std::string, std::string> assignment_from_json(const json& node) {
  if (!node.is_object()) fail(Errc::parse, "map assignment must be an object");
  std::map<std::string, std::string> out;
  for (const auto& [key, value] : node.items()) {
    if (!value.is_string()) fail(Errc::parse, "map images must be strings");
    out[key] = value.get<std::string>();
  }
  return out;
}

DigraphMap map_from_json(const json& doc, const std::string& base_dir) {
  if (!doc.is_object() || !doc.contains("domain") || !doc.contains("codomain") ||
      !doc.contains("map"))
    fail(Errc::parse, "map document needs \"domain\", \"codomain\" and \"map\"");
  Digraph domain = digraph_from_ref(doc.at("domain"), base_dir);
  Digraph codomain = digraph_from_ref(doc.at("codomain"), base_dir);
  return DigraphMap::from_labels(domain, codomain, assignment_from_json(doc.at("map")));
}

nlohmann::json homotopy_to_json(const Homotopy& h) {
  json doc;
  doc["domain"] = digraph_to_json(h.domain);
  doc["codomain"] = digraph_to_json(h.codomain);
  doc["word"] = h.line.word();
  json frames = json::array();
  for (const auto& f : h.frames) {
    json assignment = json::object();
    for (VertexId v = 0; v < h.domain.vertex_count(); ++v)
      assignment[h.domain.label(v)] = h.codomain.label(f(v));
    frames.push_back(std::move(assignment));
  }
  doc["frames"] = std::move(frames);
  return doc;
}

Homotopy homotopy_from_json(const json& doc, const std::string& base_dir) {
  if (!doc.is_object() || !doc.contains("domain") || !doc.contains("codomain") ||
      !doc.contains("word") || !doc.contains("frames"))
    fail(Errc::parse, "homotopy document needs \"domain\", \"codomain\", \"word\", \"frames\"");
  Homotopy h;
  h.domain = digraph_from_ref(doc.at("domain"), base_dir);
  h.codomain = digraph_from_ref(doc.at("codomain"), base_dir);
  h.line = LineDigraph(doc.at("word").get<std::string>());
  const auto& frames = doc.at("frames");
  if (!frames.is_array() || frames.size() != h.line.steps() + 1)
    fail(Errc::parse, "homotopy needs word length + 1 frames");
  for (const auto& frame : frames)
    h.frames.push_back(
        DigraphMap::from_labels(h.domain, h.codomain, assignment_from_json(frame)));
  return h;
}

Digraph digraph_from_text(const std::string& text, const std::string& base_dir) {
  json doc = parse_text(text);
  if (doc.is_string()) return digraph_from_ref(doc, base_dir);
  return digraph_from_json(doc);
}

DigraphMap map_from_text(const std::string& text, const std::string& base_dir) {
  return map_from_json(parse_text(text), base_dir);
}

Homotopy homotopy_from_text(const std::string& text, const std::string& base_dir) {
  return homotopy_from_json(parse_text(text), base_dir);
}

std::string dump_json(const json& doc, int indent) {
  if (indent < 0) return doc.dump();
  return doc.dump(indent) + "\n";
}

// --- DOT -------------------------------------------------------------------

namespace {

struct DotLexer {
  const std::string& text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      } else if (text.compare(pos, 2, "//") == 0) {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else if (text.compare(pos, 2, "/*") == 0) {
        pos += 2;
        while (pos + 1 < text.size() && text.compare(pos, 2, "*/") != 0) ++pos;
        pos = std::min(pos + 2, text.size());
      } else {
        break;
      }
    }
  }

  // Returns an identifier, quoted string, or a single punctuation token.
  std::string next() {
    skip_space();
    if (pos >= text.size()) return "";
    char c = text[pos];
    if (c == '"') {
      std::string out;
      ++pos;
      while (pos < text.size() && text[pos] != '"') {
        if (text[pos] == '\\' && pos + 1 < text.size()) ++pos;
        out += text[pos++];
      }
      if (pos >= text.size()) fail(Errc::parse, "unterminated string in DOT input");
      ++pos;
      return "\"" + out;  // marker so quoted ids keep their text verbatim
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
              text[pos] == '.'))
        ++pos;
      return text.substr(start, pos - start);
    }
    if (text.compare(pos, 2, "->") == 0) {
      pos += 2;
      return "->";
    }
    if (text.compare(pos, 2, "--") == 0) fail(Errc::parse, "undirected DOT edges are not supported");
    ++pos;
    return std::string(1, c);
  }
};

std::string unmark(const std::string& token) {
  return token.size() && token[0] == '"' ? token.substr(1) : token;
}

bool is_id(const std::string& token) {
  if (token.empty()) return false;
  if (token[0] == '"') return true;
  char c = token[0];
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

}  // namespace

Digraph import_dot(const std::string& text) {
  DotLexer lex{text};
  std::string token = lex.next();
  if (token == "strict") token = lex.next();
  if (token != "digraph") fail(Errc::parse, "expected 'digraph'");
  token = lex.next();
  if (token != "{") token = lex.next();  // optional graph name
  if (token != "{") fail(Errc::parse, "expected '{' in DOT input");

  std::set<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::set<std::pair<std::string, std::string>> seen;

  std::string prev;  // last id, tail of a pending -> chain
  for (token = lex.next(); !token.empty() && token != "}"; token = lex.next()) {
    if (token == ";" || token == ",") {
      prev.clear();
    } else if (token == "[") {
      int depth = 1;
      while (depth > 0) {
        std::string t = lex.next();
        if (t.empty()) fail(Errc::parse, "unterminated attribute list in DOT input");
        if (t == "[") ++depth;
        if (t == "]") --depth;
      }
    } else if (token == "=") {
      lex.next();  // graph-level attribute value
      prev.clear();
    } else if (token == "->") {
      if (prev.empty()) fail(Errc::parse, "dangling '->' in DOT input");
      std::string head = lex.next();
      if (!is_id(head)) fail(Errc::parse, "expected vertex after '->'");
      std::string from = prev, to = unmark(head);
      if (from == to) fail(Errc::self_loop, "DOT loop edge at '" + from + "'");
      if (!seen.emplace(from, to).second)
        fail(Errc::parse, "repeated DOT edge (" + from + "," + to + ")");
      vertices.insert(from);
      vertices.insert(to);
      edges.emplace_back(from, to);
      prev = to;
    } else if (is_id(token)) {
      prev = unmark(token);
      vertices.insert(prev);
    } else {
      fail(Errc::parse, "unexpected token '" + token + "' in DOT input");
    }
  }
  return Digraph({vertices.begin(), vertices.end()}, std::move(edges));
}

static std::string dot_quote(const std::string& label) {
  std::string out = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string export_dot(const Digraph& g, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << dot_quote(name) << " {\n";
  for (const auto& l : g.labels()) out << "  " << dot_quote(l) << ";\n";
  for (const auto& [from, to] : g.edge_labels())
    out << "  " << dot_quote(from) << " -> " << dot_quote(to) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace dgh
