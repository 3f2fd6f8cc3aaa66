#include "dgh/digraph.hpp"

#include <algorithm>
#include <set>

namespace dgh {

Digraph::Digraph(std::vector<std::string> labels,
                 std::vector<std::pair<std::string, std::string>> edges) {
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 1; i < labels.size(); ++i)
    if (labels[i] == labels[i - 1])
      fail(Errc::duplicate_vertex, "duplicate vertex label '" + labels[i] + "'");
  labels_ = std::move(labels);

  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& [from, to] : edges) {
    auto fi = find(from);
    if (!fi) fail(Errc::unknown_endpoint, "edge endpoint '" + from + "' is not a vertex");
    auto ti = find(to);
    if (!ti) fail(Errc::unknown_endpoint, "edge endpoint '" + to + "' is not a vertex");
    if (*fi == *ti) fail(Errc::self_loop, "self-loop at vertex '" + from + "'");
    seen.emplace(*fi, *ti);
  }
  edges_.assign(seen.begin(), seen.end());

  out_.assign(labels_.size(), {});
  in_.assign(labels_.size(), {});
  for (auto [from, to] : edges_) {
    out_[from].push_back(to);
    in_[to].push_back(from);
  }
}

Digraph Digraph::singleton(const std::string& label) { return Digraph({label}, {}); }

std::optional<VertexId> Digraph::find(const std::string& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

VertexId Digraph::index_of(const std::string& label) const {
  auto v = find(label);
  if (!v) fail(Errc::unknown_vertex, "unknown vertex '" + label + "'");
  return *v;
}

std::vector<std::pair<std::string, std::string>> Digraph::edge_labels() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(edges_.size());
  for (auto [from, to] : edges_) out.emplace_back(labels_[from], labels_[to]);
  return out;
}

bool Digraph::has_edge(VertexId from, VertexId to) const {
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(from, to));
}

bool Digraph::has_edge(const std::string& from, const std::string& to) const {
  auto fi = find(from);
  auto ti = find(to);
  return fi && ti && has_edge(*fi, *ti);
}

std::vector<std::vector<VertexId>> Digraph::weak_components() const {
  std::vector<int> comp(labels_.size(), -1);
  int next = 0;
  for (VertexId start = 0; start < labels_.size(); ++start) {
    if (comp[start] >= 0) continue;
    std::vector<VertexId> stack{start};
    comp[start] = next;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (auto w : out_[v])
        if (comp[w] < 0) comp[w] = next, stack.push_back(w);
      for (auto w : in_[v])
        if (comp[w] < 0) comp[w] = next, stack.push_back(w);
    }
    ++next;
  }
  std::vector<std::vector<VertexId>> groups(next);
  for (VertexId v = 0; v < labels_.size(); ++v) groups[comp[v]].push_back(v);
  return groups;
}

DigraphMap::DigraphMap(Digraph domain, Digraph codomain, std::vector<VertexId> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (images_.size() != domain_.vertex_count())
    fail(Errc::not_total, "assignment size does not match the domain");
  for (auto v : images_)
    if (v >= codomain_.vertex_count()) fail(Errc::unknown_vertex, "image index out of range");
  for (auto [from, to] : domain_.edges()) {
    VertexId a = images_[from], b = images_[to];
    if (a != b && !codomain_.has_edge(a, b))
      fail(Errc::edge_violation, "edge (" + domain_.label(from) + "," + domain_.label(to) +
                                     ") maps to (" + codomain_.label(a) + "," +
                                     codomain_.label(b) + ") which is not an edge");
  }
}

DigraphMap DigraphMap::from_labels(const Digraph& domain, const Digraph& codomain,
                                   const std::map<std::string, std::string>& assignment) {
  std::vector<VertexId> images(domain.vertex_count());
  for (VertexId v = 0; v < domain.vertex_count(); ++v) {
    auto it = assignment.find(domain.label(v));
    if (it == assignment.end())
      fail(Errc::not_total, "no image for vertex '" + domain.label(v) + "'");
    images[v] = codomain.index_of(it->second);
  }
  for (const auto& [key, value] : assignment)
    domain.index_of(key);  // reject assignments mentioning unknown vertices
  return DigraphMap(domain, codomain, std::move(images));
}

DigraphMap DigraphMap::identity(const Digraph& g) {
  std::vector<VertexId> images(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) images[v] = v;
  return DigraphMap(g, g, std::move(images));
}

DigraphMap DigraphMap::constant(const Digraph& domain, const Digraph& codomain, VertexId value) {
  if (value >= codomain.vertex_count()) fail(Errc::unknown_vertex, "constant value out of range");
  return DigraphMap(domain, codomain, std::vector<VertexId>(domain.vertex_count(), value));
}

const std::string& DigraphMap::image_label(const std::string& domain_label) const {
  return codomain_.label(images_[domain_.index_of(domain_label)]);
}

LineDigraph::LineDigraph(std::string word) : word_(std::move(word)) {
  for (char c : word_)
    if (c != '+' && c != '-') fail(Errc::parse, "line word must be over {+,-}");
}

std::string LineDigraph::vertex_label(std::size_t i) const {
  std::string s = std::to_string(i);
  std::size_t width = std::to_string(word_.size()).size();
  return std::string(width - s.size(), '0') + s;
}

Digraph LineDigraph::to_digraph() const {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i <= word_.size(); ++i) labels.push_back(vertex_label(i));
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (word_[i] == '+')
      edges.emplace_back(vertex_label(i), vertex_label(i + 1));
    else
      edges.emplace_back(vertex_label(i + 1), vertex_label(i));
  }
  return Digraph(std::move(labels), std::move(edges));
}

Digraph union_of(const Digraph& a, const Digraph& b) {
  std::set<std::string> labels(a.labels().begin(), a.labels().end());
  labels.insert(b.labels().begin(), b.labels().end());
  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& e : a.edge_labels()) edges.insert(e);
  for (const auto& e : b.edge_labels()) edges.insert(e);
  return Digraph({labels.begin(), labels.end()}, {edges.begin(), edges.end()});
}

Digraph intersection_of(const Digraph& a, const Digraph& b) {
  std::vector<std::string> labels;
  for (const auto& l : a.labels())
    if (b.has_vertex(l)) labels.push_back(l);
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [from, to] : a.edge_labels())
    if (b.has_edge(from, to)) edges.emplace_back(from, to);
  return Digraph(std::move(labels), std::move(edges));
}

Coproduct disjoint_union(const Digraph& a, const Digraph& b) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& l : a.labels()) labels.push_back("L:" + l);
  for (const auto& l : b.labels()) labels.push_back("R:" + l);
  for (const auto& [from, to] : a.edge_labels()) edges.emplace_back("L:" + from, "L:" + to);
  for (const auto& [from, to] : b.edge_labels()) edges.emplace_back("R:" + from, "R:" + to);
  Digraph result(std::move(labels), std::move(edges));

  std::vector<VertexId> left(a.vertex_count()), right(b.vertex_count());
  for (VertexId v = 0; v < a.vertex_count(); ++v)
    left[v] = result.index_of("L:" + a.label(v));
  for (VertexId v = 0; v < b.vertex_count(); ++v)
    right[v] = result.index_of("R:" + b.label(v));
  return {result, DigraphMap(a, result, std::move(left)), DigraphMap(b, result, std::move(right))};
}

static std::string pair_label(const std::string& u, const std::string& v) {
  return "(" + u + "," + v + ")";
}

Digraph box_product(const Digraph& a, const Digraph& b) {
  std::vector<std::string> labels;
  for (const auto& u : a.labels())
    for (const auto& v : b.labels()) labels.push_back(pair_label(u, v));
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& u : a.labels())
    for (const auto& [from, to] : b.edge_labels())
      edges.emplace_back(pair_label(u, from), pair_label(u, to));
  for (const auto& [from, to] : a.edge_labels())
    for (const auto& v : b.labels())
      edges.emplace_back(pair_label(from, v), pair_label(to, v));
  return Digraph(std::move(labels), std::move(edges));
}

QuotientResult quotient(const Digraph& g, const std::vector<std::vector<std::string>>& classes) {
  std::map<std::string, std::size_t> owner;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) fail(Errc::bad_partition, "empty class in partition");
    for (const auto& l : classes[c]) {
      if (!g.has_vertex(l)) fail(Errc::bad_partition, "class member '" + l + "' is not a vertex");
      if (!owner.emplace(l, c).second)
        fail(Errc::bad_partition, "vertex '" + l + "' appears in two classes");
    }
  }
  if (owner.size() != g.vertex_count())
    fail(Errc::bad_partition, "partition does not cover the vertex set");

  std::vector<std::string> names(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c)
    names[c] = *std::min_element(classes[c].begin(), classes[c].end());

  std::set<std::string> labels(names.begin(), names.end());
  if (labels.size() != names.size())
    fail(Errc::internal, "quotient representatives collide");
  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& [from, to] : g.edge_labels()) {
    const auto& nf = names[owner.at(from)];
    const auto& nt = names[owner.at(to)];
    if (nf != nt) edges.emplace(nf, nt);
  }
  Digraph result({labels.begin(), labels.end()}, {edges.begin(), edges.end()});

  std::vector<VertexId> images(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    images[v] = result.index_of(names[owner.at(g.label(v))]);
  return {result, DigraphMap(g, result, std::move(images))};
}

Digraph induced_subdigraph(const Digraph& g, const std::vector<std::string>& keep) {
  std::set<std::string> wanted(keep.begin(), keep.end());
  for (const auto& l : wanted)
    if (!g.has_vertex(l)) fail(Errc::unknown_vertex, "unknown vertex '" + l + "'");
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [from, to] : g.edge_labels())
    if (wanted.count(from) && wanted.count(to)) edges.emplace_back(from, to);
  return Digraph({wanted.begin(), wanted.end()}, std::move(edges));
}

bool is_subdigraph(const Digraph& x, const Digraph& g) {
  for (const auto& l : x.labels())
    if (!g.has_vertex(l)) return false;
  for (const auto& [from, to] : x.edge_labels())
    if (!g.has_edge(from, to)) return false;
  return true;
}

Digraph image_digraph(const DigraphMap& f) {
  std::set<std::string> labels;
  for (VertexId v = 0; v < f.domain().vertex_count(); ++v)
    labels.insert(f.codomain().label(f(v)));
  std::set<std::pair<std::string, std::string>> edges;
  for (auto [from, to] : f.domain().edges()) {
    VertexId a = f(from), b = f(to);
    if (a != b) edges.emplace(f.codomain().label(a), f.codomain().label(b));
  }
  return Digraph({labels.begin(), labels.end()}, {edges.begin(), edges.end()});
}

std::vector<std::string> image2(const DigraphMap& f) {
  std::vector<std::size_t> count(f.codomain().vertex_count(), 0);
  for (VertexId v = 0; v < f.domain().vertex_count(); ++v) ++count[f(v)];
  std::vector<std::string> out;
  for (VertexId v = 0; v < f.codomain().vertex_count(); ++v)
    if (count[v] >= 2) out.push_back(f.codomain().label(v));
  return out;
}

DigraphMap compose(const DigraphMap& g, const DigraphMap& f) {
  if (f.codomain() != g.domain())
    fail(Errc::domain_mismatch, "compose: codomain of inner map differs from domain of outer map");
  std::vector<VertexId> images(f.domain().vertex_count());
  for (VertexId v = 0; v < f.domain().vertex_count(); ++v) images[v] = g(f(v));
  return DigraphMap(f.domain(), g.codomain(), std::move(images));
}

DigraphMap restrict_map(const DigraphMap& f, const Digraph& sub) {
  if (!is_subdigraph(sub, f.domain()))
    fail(Errc::domain_mismatch, "restrict_map: not a subdigraph of the domain");
  std::vector<VertexId> images(sub.vertex_count());
  for (VertexId v = 0; v < sub.vertex_count(); ++v)
    images[v] = f(f.domain().index_of(sub.label(v)));
  return DigraphMap(sub, f.codomain(), std::move(images));
}

}  // namespace dgh
