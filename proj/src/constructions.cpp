#include "dgh/constructions.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace dgh {

namespace {

std::string slice_label(const std::string& g, int level) {
  return "(" + g + "," + std::to_string(level) + ")";
}

std::string fresh_apex(const std::set<std::string>& taken) {
  std::string apex = "*";
  while (taken.count(apex)) apex += '*';
  return apex;
}

// The generated labels must not collide with each other or with labels kept
// verbatim from the inputs.
void check_label_count(const std::set<std::string>& labels, std::size_t expected,
                       const char* what) {
  if (labels.size() != expected)
    fail(Errc::label_collision,
         std::string(what) + ": input labels collide with generated slice labels");
}

DigraphMap embed_by_labels(const Digraph& from, const Digraph& into,
                           const std::function<std::string(const std::string&)>& rename) {
  std::vector<VertexId> images(from.vertex_count());
  for (VertexId v = 0; v < from.vertex_count(); ++v)
    images[v] = into.index_of(rename(from.label(v)));
  return DigraphMap(from, into, std::move(images));
}

DigraphMap apex_map(const Digraph& into, const std::string& apex) {
  Digraph point = Digraph::singleton(apex);
  return DigraphMap(point, into, {into.index_of(apex)});
}

struct ImageData {
  Digraph image;                   // image(f) as a subdigraph of the codomain
  std::set<std::string> multi;     // vertices with >= 2 preimages
  std::vector<std::string> v1p;    // targets of image edges from single-preimage vertices
  std::vector<std::string> v1pp;   // sources of image edges into single-preimage vertices
};

ImageData analyze_image(const DigraphMap& f) {
  ImageData data;
  data.image = image_digraph(f);
  auto multi = image2(f);
  data.multi.insert(multi.begin(), multi.end());
  std::set<std::string> v1p, v1pp;
  for (const auto& [from, to] : data.image.edge_labels()) {
    if (data.multi.count(to) && !data.multi.count(from)) v1p.insert(to);
    if (data.multi.count(from) && !data.multi.count(to)) v1pp.insert(from);
  }
  data.v1p.assign(v1p.begin(), v1p.end());
  data.v1pp.assign(v1pp.begin(), v1pp.end());
  return data;
}

// Least preimage in label order, unless overridden.
SectionChoices pick_sections(const DigraphMap& f, const ImageData& data,
                             const SectionChoices& overrides) {
  std::set<std::string> designated(data.v1p.begin(), data.v1p.end());
  designated.insert(data.v1pp.begin(), data.v1pp.end());
  SectionChoices choices;
  for (const auto& h : designated) {
    auto it = overrides.find(h);
    if (it != overrides.end()) {
      if (!f.domain().has_vertex(it->second) || f.image_label(it->second) != h)
        fail(Errc::unknown_vertex,
             "override '" + it->second + "' is not a preimage of '" + h + "'");
      choices[h] = it->second;
      continue;
    }
    for (VertexId v = 0; v < f.domain().vertex_count(); ++v) {
      if (f.codomain().label(f(v)) != h) continue;
      choices[h] = f.domain().label(v);
      break;  // labels are sorted, first hit is least
    }
  }
  return choices;
}

}  // namespace

ConstructionResult cone(const Digraph& g) {
  std::set<std::string> labels;
  for (const auto& l : g.labels()) labels.insert(slice_label(l, 0));
  check_label_count(labels, g.vertex_count(), "cone");
  std::string apex = fresh_apex(labels);
  labels.insert(apex);

  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& [from, to] : g.edge_labels())
    edges.emplace(slice_label(from, 0), slice_label(to, 0));
  for (const auto& l : g.labels()) edges.emplace(apex, slice_label(l, 0));

  ConstructionResult out;
  out.result = Digraph({labels.begin(), labels.end()}, {edges.begin(), edges.end()});
  out.maps.emplace("embed_base", embed_by_labels(g, out.result,
                                                 [](const std::string& l) { return slice_label(l, 0); }));
  out.maps.emplace("apex", apex_map(out.result, apex));
  out.apex = apex;
  return out;
}

namespace {

// Shared body of the two cylinders; with_bridges adds the modified edges.
ConstructionResult cylinder_impl(const DigraphMap& f, bool with_bridges) {
  const Digraph& g = f.domain();
  const Digraph& h = f.codomain();

  std::set<std::string> labels(h.labels().begin(), h.labels().end());
  for (const auto& l : g.labels()) labels.insert(slice_label(l, 1));
  check_label_count(labels, h.vertex_count() + g.vertex_count(), "mapping cylinder");

  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& e : h.edge_labels()) edges.insert(e);
  for (const auto& [from, to] : g.edge_labels())
    edges.emplace(slice_label(from, 1), slice_label(to, 1));
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    edges.emplace(slice_label(g.label(v), 1), h.label(f(v)));

  if (with_bridges) {
    ImageData data = analyze_image(f);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const std::string& fg = h.label(f(v));
      if (data.multi.count(fg)) continue;
      for (const auto& [from, to] : data.image.edge_labels()) {
        if (from == fg && data.multi.count(to))
          edges.emplace(slice_label(g.label(v), 1), to);
        if (to == fg && data.multi.count(from))
          edges.emplace(from, slice_label(g.label(v), 1));
      }
    }
  }

  ConstructionResult out;
  out.result = Digraph({labels.begin(), labels.end()}, {edges.begin(), edges.end()});
  out.maps.emplace("embed_H",
                   embed_by_labels(h, out.result, [](const std::string& l) { return l; }));
  out.maps.emplace("embed_G", embed_by_labels(g, out.result,
                                              [](const std::string& l) { return slice_label(l, 1); }));
  if (with_bridges) {
    std::vector<VertexId> images(out.result.vertex_count());
    for (VertexId v = 0; v < h.vertex_count(); ++v)
      images[out.result.index_of(h.label(v))] = v;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      images[out.result.index_of(slice_label(g.label(v), 1))] = f(v);
    out.maps.emplace("crush", DigraphMap(out.result, h, std::move(images)));
  }
  return out;
}

}  // namespace

ConstructionResult mapping_cylinder(const DigraphMap& f) { return cylinder_impl(f, false); }

ConstructionResult modified_mapping_cylinder(const DigraphMap& f) {
  return cylinder_impl(f, true);
}

ConstructionResult modified_cone(const DigraphMap& f, const SectionChoices& overrides) {
  const Digraph& g = f.domain();
  ImageData data = analyze_image(f);
  SectionChoices choices = pick_sections(f, data, overrides);

  std::set<std::string> labels;
  for (const auto& l : g.labels()) labels.insert(slice_label(l, 0));
  for (const auto& [h, unused] : choices) labels.insert(h);
  check_label_count(labels, g.vertex_count() + choices.size(), "modified cone");
  std::string apex = fresh_apex(labels);
  labels.insert(apex);

  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& [from, to] : g.edge_labels())
    edges.emplace(slice_label(from, 0), slice_label(to, 0));
  for (const auto& l : g.labels()) {
    edges.emplace(apex, slice_label(l, 0));
    edges.emplace(slice_label(l, 0), apex);
  }
  for (const auto& hp : data.v1p) edges.emplace(apex, hp);
  for (const auto& hp : data.v1pp) edges.emplace(hp, apex);
  for (const auto& [h, gh] : choices) edges.emplace(slice_label(gh, 0), h);

  ConstructionResult out;
  out.result = Digraph({labels.begin(), labels.end()}, {edges.begin(), edges.end()});
  out.maps.emplace("embed_base", embed_by_labels(g, out.result,
                                                 [](const std::string& l) { return slice_label(l, 0); }));
  out.maps.emplace("apex", apex_map(out.result, apex));
  out.choices = std::move(choices);
  out.apex = apex;
  return out;
}

ConstructionResult modified_mapping_cone(const DigraphMap& f, const SectionChoices& overrides) {
  const Digraph& g = f.domain();
  const Digraph& h = f.codomain();
  ConstructionResult mcone = modified_cone(f, overrides);
  ConstructionResult cyl = modified_mapping_cylinder(f);

  std::set<std::string> labels(cyl.result.labels().begin(), cyl.result.labels().end());
  std::string apex = fresh_apex(labels);
  labels.insert(apex);

  // The cone base (g,0) is identified with the cylinder slice (g,1); its
  // designated vertices are identified with the same-named codomain vertices.
  auto rename_cone = [&mcone, &apex](const std::string& l) -> std::string {
    if (l == mcone.apex) return apex;
    if (l.size() > 4 && l.front() == '(' && l.compare(l.size() - 3, 3, ",0)") == 0)
      return slice_label(l.substr(1, l.size() - 4), 1);
    return l;  // designated vertex, already a codomain label
  };

  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& e : cyl.result.edge_labels()) edges.insert(e);
  for (const auto& [from, to] : mcone.result.edge_labels())
    edges.emplace(rename_cone(from), rename_cone(to));

  ConstructionResult out;
  out.result = Digraph({labels.begin(), labels.end()}, {edges.begin(), edges.end()});
  out.maps.emplace("embed_H",
                   embed_by_labels(h, out.result, [](const std::string& l) { return l; }));
  out.maps.emplace("embed_G", embed_by_labels(g, out.result,
                                              [](const std::string& l) { return slice_label(l, 1); }));
  out.maps.emplace("apex", apex_map(out.result, apex));
  out.maps.emplace("embed_cone_part", embed_by_labels(mcone.result, out.result, rename_cone));
  out.maps.emplace("embed_cyl_part", embed_by_labels(cyl.result, out.result,
                                                     [](const std::string& l) { return l; }));
  out.choices = mcone.choices;
  out.apex = apex;
  return out;
}

ConstructionResult mapping_tube(const DigraphMap& f, const DigraphMap& g) {
  if (f.domain() != g.domain() || f.codomain() != g.codomain())
    fail(Errc::domain_mismatch, "mapping tube needs maps with equal domain and codomain");
  const Digraph& dom = f.domain();
  const Digraph& h = f.codomain();

  std::set<std::string> labels(h.labels().begin(), h.labels().end());
  for (const auto& l : dom.labels()) {
    labels.insert(slice_label(l, 1));
    labels.insert(slice_label(l, 2));
  }
  check_label_count(labels, h.vertex_count() + 2 * dom.vertex_count(), "mapping tube");

  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& e : h.edge_labels()) edges.insert(e);
  for (const auto& [from, to] : dom.edge_labels()) {
    edges.emplace(slice_label(from, 1), slice_label(to, 1));
    edges.emplace(slice_label(from, 2), slice_label(to, 2));
  }
  for (VertexId v = 0; v < dom.vertex_count(); ++v) {
    const std::string& l = dom.label(v);
    edges.emplace(slice_label(l, 1), h.label(f(v)));   // I3 edge 1 -> 0
    edges.emplace(slice_label(l, 1), slice_label(l, 2));  // 1 -> 2
    edges.emplace(slice_label(l, 2), h.label(g(v)));   // 2 -> 3
  }

  ConstructionResult out;
  out.result = Digraph({labels.begin(), labels.end()}, {edges.begin(), edges.end()});
  out.maps.emplace("embed_H",
                   embed_by_labels(h, out.result, [](const std::string& l) { return l; }));
  out.maps.emplace("embed_G_level1", embed_by_labels(dom, out.result, [](const std::string& l) {
                     return slice_label(l, 1);
                   }));
  out.maps.emplace("embed_G_level2", embed_by_labels(dom, out.result, [](const std::string& l) {
                     return slice_label(l, 2);
                   }));
  return out;
}

TubeDecomposition tube_decomposition(const DigraphMap& f, const DigraphMap& g) {
  ConstructionResult tube = mapping_tube(f, g);
  const Digraph& dom = f.domain();
  const Digraph& h = f.codomain();

  std::vector<std::string> cyl_labels(h.labels().begin(), h.labels().end());
  std::vector<std::string> prod_labels;
  for (const auto& l : dom.labels()) {
    cyl_labels.push_back(slice_label(l, 1));
    cyl_labels.push_back(slice_label(l, 2));
    prod_labels.push_back(slice_label(l, 1));
    prod_labels.push_back(slice_label(l, 2));
  }

  std::vector<std::pair<std::string, std::string>> cyl_edges, prod_edges, both;
  for (const auto& e : h.edge_labels()) cyl_edges.push_back(e);
  for (const auto& [from, to] : dom.edge_labels()) {
    for (int level : {1, 2}) {
      cyl_edges.emplace_back(slice_label(from, level), slice_label(to, level));
      prod_edges.emplace_back(slice_label(from, level), slice_label(to, level));
      both.emplace_back(slice_label(from, level), slice_label(to, level));
    }
  }
  for (VertexId v = 0; v < dom.vertex_count(); ++v) {
    const std::string& l = dom.label(v);
    cyl_edges.emplace_back(slice_label(l, 1), h.label(f(v)));
    cyl_edges.emplace_back(slice_label(l, 2), h.label(g(v)));
    prod_edges.emplace_back(slice_label(l, 1), slice_label(l, 2));
  }

  TubeDecomposition out;
  out.tube = tube.result;
  out.cylinder_part = Digraph(std::move(cyl_labels), std::move(cyl_edges));
  out.product_part = Digraph(prod_labels, std::move(prod_edges));
  out.intersection = Digraph(prod_labels, std::move(both));
  return out;
}

ConstructionResult s_digraph(const Digraph& g, const Digraph& h) {
  Coproduct cop = disjoint_union(g, h);
  Digraph uni = union_of(g, h);
  std::vector<VertexId> images(cop.digraph.vertex_count());
  for (VertexId v = 0; v < cop.digraph.vertex_count(); ++v)
    images[v] = uni.index_of(cop.digraph.label(v).substr(2));
  DigraphMap fold(cop.digraph, uni, std::move(images));

  ConstructionResult cof = modified_mapping_cone(fold);
  Digraph inter = intersection_of(g, h);

  std::vector<std::string> keep{cof.apex};
  for (const auto& l : inter.labels()) {
    keep.push_back(l);
    keep.push_back(slice_label("L:" + l, 1));
    keep.push_back(slice_label("R:" + l, 1));
  }
  Digraph s = induced_subdigraph(cof.result, keep);

  DigraphMap include =
      embed_by_labels(s, cof.result, [](const std::string& l) { return l; });
  std::vector<VertexId> retract_images(cof.result.vertex_count());
  for (VertexId v = 0; v < cof.result.vertex_count(); ++v) {
    auto in_s = s.find(cof.result.label(v));
    retract_images[v] = in_s ? *in_s : s.index_of(cof.apex);
  }
  DigraphMap retract(cof.result, s, std::move(retract_images));

  ConstructionResult out;
  out.result = std::move(s);
  out.maps.emplace("include", std::move(include));
  out.maps.emplace("retract", std::move(retract));
  out.choices = cof.choices;
  out.apex = cof.apex;
  return out;
}

// --- closed-form homotopies -------------------------------------------------

Homotopy cone_slide_homotopy(const DigraphMap& f, const ConstructionResult& cofiber) {
  const DigraphMap& embed_h = cofiber.maps.at("embed_H");
  const DigraphMap& embed_g = cofiber.maps.at("embed_G");
  Homotopy out;
  out.domain = f.domain();
  out.codomain = cofiber.result;
  out.line = LineDigraph("-+");
  out.frames.push_back(compose(embed_h, f));
  out.frames.push_back(embed_g);
  out.frames.push_back(
      DigraphMap::constant(f.domain(), cofiber.result, cofiber.result.index_of(cofiber.apex)));
  return out;
}

Homotopy crush_homotopy(const ConstructionResult& cylinder) {
  const DigraphMap& crush = cylinder.maps.at("crush");
  const DigraphMap& embed_h = cylinder.maps.at("embed_H");
  Homotopy out;
  out.domain = cylinder.result;
  out.codomain = cylinder.result;
  out.line = LineDigraph("+");
  out.frames.push_back(DigraphMap::identity(cylinder.result));
  out.frames.push_back(compose(embed_h, crush));
  return out;
}

Homotopy modified_cone_contraction(const ConstructionResult& mcone) {
  const Digraph& c = mcone.result;
  std::vector<VertexId> slide(c.vertex_count());
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    auto it = mcone.choices.find(c.label(v));
    slide[v] = it == mcone.choices.end() ? v : c.index_of(slice_label(it->second, 0));
  }
  Homotopy out;
  out.domain = c;
  out.codomain = c;
  out.line = LineDigraph("--");
  out.frames.push_back(DigraphMap::identity(c));
  out.frames.push_back(DigraphMap(c, c, std::move(slide)));
  out.frames.push_back(DigraphMap::constant(c, c, c.index_of(mcone.apex)));
  return out;
}

Homotopy tube_ends_homotopy(const DigraphMap& f, const DigraphMap& g,
                            const ConstructionResult& tube) {
  const DigraphMap& embed_h = tube.maps.at("embed_H");
  Homotopy out;
  out.domain = f.domain();
  out.codomain = tube.result;
  out.line = LineDigraph("-++");
  out.frames.push_back(compose(embed_h, f));
  out.frames.push_back(tube.maps.at("embed_G_level1"));
  out.frames.push_back(tube.maps.at("embed_G_level2"));
  out.frames.push_back(compose(embed_h, g));
  return out;
}

Homotopy s_retract_homotopy(const Digraph& g, const Digraph& h, const ConstructionResult& s) {
  const DigraphMap& retract = s.maps.at("retract");
  const DigraphMap& include = s.maps.at("include");
  const Digraph& cof = retract.domain();
  Digraph inter = intersection_of(g, h);

  std::vector<VertexId> slide(cof.vertex_count());
  for (VertexId v = 0; v < cof.vertex_count(); ++v) {
    const std::string& l = cof.label(v);
    if (!inter.has_vertex(l) && (g.has_vertex(l) || h.has_vertex(l))) {
      // union vertex outside the intersection: push to its unique slice copy
      const std::string tag = g.has_vertex(l) ? "L:" : "R:";
      slide[v] = cof.index_of(slice_label(tag + l, 1));
    } else {
      slide[v] = v;
    }
  }

  Homotopy out;
  out.domain = cof;
  out.codomain = cof;
  out.line = LineDigraph("--");
  out.frames.push_back(DigraphMap::identity(cof));
  out.frames.push_back(DigraphMap(cof, cof, std::move(slide)));
  out.frames.push_back(compose(include, retract));
  return out;
}

}  // namespace dgh
