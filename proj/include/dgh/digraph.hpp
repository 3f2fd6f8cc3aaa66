#pragma once

// Finite directed graphs (no loops, no parallel edges), digraph maps, and the
// basic set/product/quotient operations everything else is built from.
//
// Vertices are labeled by strings and kept in lexicographic order; every
// canonical choice made downstream (quotient representatives, section
// vertices, search order) refers to this order, so results are reproducible.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgh/error.hpp"

namespace dgh {

using VertexId = std::uint32_t;

class Digraph {
 public:
  Digraph() = default;

  // Validates: no duplicate labels, no self-loops, endpoints known.
  Digraph(std::vector<std::string> labels,
          std::vector<std::pair<std::string, std::string>> edges);

  static Digraph singleton(const std::string& label = "*");

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return labels_.empty(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(VertexId v) const { return labels_[v]; }
  std::optional<VertexId> find(const std::string& label) const;
  VertexId index_of(const std::string& label) const;  // throws unknown_vertex
  bool has_vertex(const std::string& label) const { return find(label).has_value(); }

  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
  std::vector<std::pair<std::string, std::string>> edge_labels() const;
  bool has_edge(VertexId from, VertexId to) const;
  bool has_edge(const std::string& from, const std::string& to) const;

  const std::vector<VertexId>& out_neighbors(VertexId v) const { return out_[v]; }
  const std::vector<VertexId>& in_neighbors(VertexId v) const { return in_[v]; }

  // Weakly connected components, each a sorted vertex list; components
  // ordered by smallest member.
  std::vector<std::vector<VertexId>> weak_components() const;

  bool operator==(const Digraph& other) const {
    return labels_ == other.labels_ && edges_ == other.edges_;
  }
  bool operator!=(const Digraph& other) const { return !(*this == other); }

 private:
  std::vector<std::string> labels_;                     // sorted
  std::vector<std::pair<VertexId, VertexId>> edges_;    // sorted pairs
  std::vector<std::vector<VertexId>> out_, in_;         // sorted adjacency
};

class DigraphMap {
 public:
  DigraphMap() = default;

  // Validates the edge condition: every domain edge is collapsed or preserved.
  DigraphMap(Digraph domain, Digraph codomain, std::vector<VertexId> images);

  // Builds from a label assignment; errors: not_total, unknown_vertex,
  // edge_violation (message names the violating edge).
  static DigraphMap from_labels(const Digraph& domain, const Digraph& codomain,
                                const std::map<std::string, std::string>& assignment);
  static DigraphMap identity(const Digraph& g);
  static DigraphMap constant(const Digraph& domain, const Digraph& codomain, VertexId value);

  const Digraph& domain() const { return domain_; }
  const Digraph& codomain() const { return codomain_; }
  const std::vector<VertexId>& images() const { return images_; }
  VertexId operator()(VertexId v) const { return images_[v]; }
  const std::string& image_label(const std::string& domain_label) const;

  bool operator==(const DigraphMap& other) const {
    return domain_ == other.domain_ && codomain_ == other.codomain_ && images_ == other.images_;
  }
  bool operator!=(const DigraphMap& other) const { return !(*this == other); }

 private:
  Digraph domain_, codomain_;
  std::vector<VertexId> images_;
};

// An n-step line digraph given by its orientation word over {+,-}:
// '+' at step i is the edge (i, i+1), '-' is (i+1, i).
class LineDigraph {
 public:
  LineDigraph() = default;
  explicit LineDigraph(std::string word);

  std::size_t steps() const { return word_.size(); }
  const std::string& word() const { return word_; }
  char orientation(std::size_t step) const { return word_[step]; }

  // Vertices "0".."n" (zero-padded when n > 9 so the label order is the
  // vertex order), one edge per step.
  Digraph to_digraph() const;
  std::string vertex_label(std::size_t i) const;

 private:
  std::string word_;
};

// --- set-theoretic and product operations ---------------------------------

// Shared labels denote the same vertex.
Digraph union_of(const Digraph& a, const Digraph& b);
Digraph intersection_of(const Digraph& a, const Digraph& b);

struct Coproduct {
  Digraph digraph;  // labels "L:x" and "R:y"
  DigraphMap inject_left, inject_right;
};
Coproduct disjoint_union(const Digraph& a, const Digraph& b);

// Vertices "(u,v)"; an edge moves along exactly one factor edge.
Digraph box_product(const Digraph& a, const Digraph& b);

struct QuotientResult {
  Digraph digraph;  // classes named by their minimal member
  DigraphMap projection;
};
// classes must partition the vertex set exactly; self-loops produced by
// collapsing an edge inside a class are dropped.
QuotientResult quotient(const Digraph& g, const std::vector<std::vector<std::string>>& classes);

Digraph induced_subdigraph(const Digraph& g, const std::vector<std::string>& keep);

// true when x's vertices and edges are subsets of g's.
bool is_subdigraph(const Digraph& x, const Digraph& g);

// Image of f as a (non-induced) subdigraph of the codomain.
Digraph image_digraph(const DigraphMap& f);

// Codomain vertices with at least two preimages, sorted.
std::vector<std::string> image2(const DigraphMap& f);

// g∘f; throws domain_mismatch unless f's codomain equals g's domain.
DigraphMap compose(const DigraphMap& g, const DigraphMap& f);

// f restricted to a subdigraph of its domain.
DigraphMap restrict_map(const DigraphMap& f, const Digraph& sub);

}  // namespace dgh
