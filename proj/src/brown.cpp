#include "dgh/brown.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include <nlohmann/json.hpp>

#include "dgh/constructions.hpp"
#include "dgh/json_io.hpp"
#include "dgh/path_homology.hpp"

namespace dgh {

using nlohmann::json;

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint32_t Rng::below(std::uint32_t n) { return n ? static_cast<std::uint32_t>(next() % n) : 0; }

bool Rng::percent(std::uint32_t p) { return below(100) < p; }

std::uint64_t instance_seed(std::uint64_t suite_seed, std::size_t index) {
  Rng mixer(suite_seed + 0x9e3779b97f4a7c15ull * (index + 1));
  return mixer.next();
}

MvInstance make_mv_instance(Digraph g, Digraph g1, Digraph g2) {
  if (union_of(g1, g2) != g)
    fail(Errc::domain_mismatch, "decomposition does not union to the ambient digraph");
  return {std::move(g), std::move(g1), std::move(g2)};
}

namespace {

std::string fnv_digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

DigraphMap inclusion(const Digraph& sub, const Digraph& super) {
  std::vector<VertexId> images(sub.vertex_count());
  for (VertexId v = 0; v < sub.vertex_count(); ++v) images[v] = super.index_of(sub.label(v));
  return DigraphMap(sub, super, std::move(images));
}

json group_json(const FgAbGroup& g) {
  json out;
  out["rank"] = g.rank();
  json torsion = json::array();
  for (const auto& d : g.torsion()) torsion.push_back(d.str());
  out["torsion"] = std::move(torsion);
  out["name"] = g.describe();
  return out;
}

CheckReport finish(const std::string& check, const json& instance, bool pass, json outcome,
                   const std::string& detail) {
  CheckReport report;
  report.check = check;
  report.digest = fnv_digest(instance.dump());
  report.pass = pass;
  report.detail = detail;
  json witness;
  witness["instance"] = instance;
  witness["outcome"] = std::move(outcome);
  report.witness_json = witness.dump();
  return report;
}

GroupHom induced_at(const DigraphMap& f, const HomologyResult& cod, const HomologyResult& dom,
                    std::size_t degree) {
  return induced_cochain_maps(f, cod, dom).at(degree);
}

}  // namespace

CheckReport check_triviality() {
  Digraph point = Digraph::singleton();
  Digraph two({"p", "q"}, {});
  Digraph iplus = LineDigraph("+").to_digraph();
  json outcome;
  bool pass = true;
  for (const auto& [name, g] :
       std::vector<std::pair<std::string, Digraph>>{{"point", point}, {"two", two}, {"I+", iplus}}) {
    const FgAbGroup& h1 = cohomology(g, 1).groups[1];
    outcome[name] = group_json(h1);
    pass = pass && h1.is_trivial();
  }
  json instance = {{"check", "triviality"}};
  return finish("triviality", instance, pass, std::move(outcome), "H1 of contractible pieces");
}

CheckReport check_additivity(const Digraph& g, const Digraph& h, std::size_t degree) {
  Coproduct cop = disjoint_union(g, h);
  HomologyResult res_cop = cohomology(cop.digraph, degree);
  HomologyResult res_g = cohomology(g, degree);
  HomologyResult res_h = cohomology(h, degree);

  GroupHom left = induced_at(cop.inject_left, res_cop, res_g, degree);
  GroupHom right = induced_at(cop.inject_right, res_cop, res_h, degree);
  FgAbGroup trivial = FgAbGroup::trivial();
  FiberProduct product = fiber_product(GroupHom::zero(res_g.groups[degree], trivial),
                                       GroupHom::zero(res_h.groups[degree], trivial));
  GroupHom pair = pair_into_fiber(left, right, product);

  bool pass = pair.is_surjective() && pair.is_injective();
  json instance;
  instance["G"] = digraph_to_json(g);
  instance["H"] = digraph_to_json(h);
  instance["degree"] = degree;
  json outcome;
  outcome["H(G)"] = group_json(res_g.groups[degree]);
  outcome["H(H)"] = group_json(res_h.groups[degree]);
  outcome["H(G+H)"] = group_json(res_cop.groups[degree]);
  outcome["iso"] = pass;
  return finish("additivity", instance, pass, std::move(outcome),
                "injections induce H(G⊔H) ≅ H(G) × H(H)");
}

CheckReport check_mv_surjectivity(const MvInstance& inst, std::size_t degree) {
  Digraph inter = intersection_of(inst.g1, inst.g2);
  HomologyResult res_g = cohomology(inst.g, degree);
  HomologyResult res_1 = cohomology(inst.g1, degree);
  HomologyResult res_2 = cohomology(inst.g2, degree);
  HomologyResult res_i = cohomology(inter, degree);

  GroupHom j1 = induced_at(inclusion(inter, inst.g1), res_1, res_i, degree);
  GroupHom j2 = induced_at(inclusion(inter, inst.g2), res_2, res_i, degree);
  GroupHom i1 = induced_at(inclusion(inst.g1, inst.g), res_g, res_1, degree);
  GroupHom i2 = induced_at(inclusion(inst.g2, inst.g), res_g, res_2, degree);

  FiberProduct product = fiber_product(j1, j2);
  GroupHom pair = pair_into_fiber(i1, i2, product);
  bool pass = pair.is_surjective();

  json instance;
  instance["G"] = digraph_to_json(inst.g);
  instance["G1"] = digraph_to_json(inst.g1);
  instance["G2"] = digraph_to_json(inst.g2);
  instance["degree"] = degree;
  json outcome;
  outcome["H(G)"] = group_json(res_g.groups[degree]);
  outcome["H(G1)"] = group_json(res_1.groups[degree]);
  outcome["H(G2)"] = group_json(res_2.groups[degree]);
  outcome["H(G1∩G2)"] = group_json(res_i.groups[degree]);
  outcome["fiber_product"] = group_json(product.group);
  outcome["surjective"] = pass;
  return finish("mv", instance, pass, std::move(outcome),
                "H(G) -> H(G1) x_H(∩) H(G2) is onto");
}

CheckReport check_cochain_lemmas(const MvInstance& inst) {
  Digraph inter = intersection_of(inst.g1, inst.g2);

  // Omega^1 is free on edges, Omega^0 free on vertices; the inclusions act
  // by restriction of functionals.
  auto restriction = [](const std::vector<std::pair<std::string, std::string>>& sub,
                        const std::vector<std::pair<std::string, std::string>>& super) {
    IntMatrix m(sub.size(), super.size());
    for (std::size_t i = 0; i < sub.size(); ++i)
      for (std::size_t j = 0; j < super.size(); ++j)
        if (sub[i] == super[j]) m.at(i, j) = 1;
    return m;
  };
  auto vertex_pairs = [](const Digraph& g) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& l : g.labels()) out.emplace_back(l, l);
    return out;
  };

  auto edges_g = inst.g.edge_labels();
  auto edges_1 = inst.g1.edge_labels();
  auto edges_2 = inst.g2.edge_labels();
  auto edges_i = inter.edge_labels();

  IntMatrix into = IntMatrix::vstack(restriction(edges_1, edges_g), restriction(edges_2, edges_g));
  IntMatrix j2 = restriction(edges_i, edges_2);
  for (std::size_t i = 0; i < j2.rows(); ++i)
    for (std::size_t j = 0; j < j2.cols(); ++j) j2.at(i, j) = -j2.at(i, j);
  IntMatrix difference = IntMatrix::hstack(restriction(edges_i, edges_1), j2);

  bool exact_middle = lattice_equal(integer_kernel(difference), into);

  IntMatrix v2 = restriction(vertex_pairs(inter), vertex_pairs(inst.g2));
  for (std::size_t i = 0; i < v2.rows(); ++i)
    for (std::size_t j = 0; j < v2.cols(); ++j) v2.at(i, j) = -v2.at(i, j);
  IntMatrix j0 = IntMatrix::hstack(restriction(vertex_pairs(inter), vertex_pairs(inst.g1)), v2);
  bool onto = hermite_column_basis(j0) == IntMatrix::identity(inter.vertex_count());

  json instance;
  instance["G"] = digraph_to_json(inst.g);
  instance["G1"] = digraph_to_json(inst.g1);
  instance["G2"] = digraph_to_json(inst.g2);
  json outcome;
  outcome["exact_at_middle"] = exact_middle;
  outcome["surjective_at_omega0"] = onto;
  return finish("cochain", instance, exact_middle && onto, std::move(outcome),
                "cochain-level exactness and surjectivity");
}

CheckReport check_cone_exactness(const DigraphMap& f, std::size_t degree) {
  ConstructionResult cof = modified_mapping_cone(f);
  HomologyResult res_c = cohomology(cof.result, degree);
  HomologyResult res_h = cohomology(f.codomain(), degree);
  HomologyResult res_g = cohomology(f.domain(), degree);

  GroupHom i_star = induced_at(cof.maps.at("embed_H"), res_c, res_h, degree);
  GroupHom f_star = induced_at(f, res_h, res_g, degree);

  bool cheap_half = compose(f_star, i_star).is_zero();
  bool exact = cheap_half && subgroup_equal(i_star.image(), f_star.kernel());

  json instance;
  instance["f"] = map_to_json(f);
  instance["degree"] = degree;
  json outcome;
  outcome["H(C(f))"] = group_json(res_c.groups[degree]);
  outcome["H(H)"] = group_json(res_h.groups[degree]);
  outcome["H(G)"] = group_json(res_g.groups[degree]);
  outcome["f*i*=0"] = cheap_half;
  outcome["image_equals_kernel"] = exact;
  return finish("cone", instance, exact, std::move(outcome),
                "H(C(f)) -> H(H) -> H(G) exact at H(H)");
}

CheckReport check_four_term(const Digraph& g, const Digraph& h, std::size_t degree) {
  Coproduct cop = disjoint_union(g, h);
  Digraph uni = union_of(g, h);
  std::vector<VertexId> images(cop.digraph.vertex_count());
  for (VertexId v = 0; v < cop.digraph.vertex_count(); ++v)
    images[v] = uni.index_of(cop.digraph.label(v).substr(2));
  DigraphMap fold(cop.digraph, uni, std::move(images));

  CheckReport first = check_cone_exactness(fold, degree);
  ConstructionResult cof = modified_mapping_cone(fold);
  CheckReport second = check_cone_exactness(cof.maps.at("embed_H"), degree);

  json instance;
  instance["G"] = digraph_to_json(g);
  instance["H"] = digraph_to_json(h);
  instance["degree"] = degree;
  json outcome;
  outcome["exact_at_union"] = first.pass;
  outcome["exact_at_cone"] = second.pass;
  outcome["first"] = json::parse(first.witness_json);
  outcome["second"] = json::parse(second.witness_json);
  return finish("four-term", instance, first.pass && second.pass, std::move(outcome),
                "exactness at H(G∪H) and at H(C(f))");
}

CheckReport check_tube_surjectivity(const DigraphMap& f, const DigraphMap& g,
                                    std::size_t degree) {
  ConstructionResult tube = mapping_tube(f, g);
  const Digraph& dom = f.domain();
  const Digraph& h = f.codomain();
  Coproduct two = disjoint_union(dom, dom);

  std::vector<VertexId> fold_images(two.digraph.vertex_count());
  std::vector<VertexId> fg_images(two.digraph.vertex_count());
  for (VertexId v = 0; v < two.digraph.vertex_count(); ++v) {
    const std::string& l = two.digraph.label(v);
    VertexId original = dom.index_of(l.substr(2));
    fold_images[v] = original;
    fg_images[v] = l[0] == 'L' ? f(original) : g(original);
  }
  DigraphMap fold(two.digraph, dom, std::move(fold_images));
  DigraphMap f_sqcup_g(two.digraph, h, std::move(fg_images));

  HomologyResult res_tube = cohomology(tube.result, degree);
  HomologyResult res_dom = cohomology(dom, degree);
  HomologyResult res_h = cohomology(h, degree);
  HomologyResult res_two = cohomology(two.digraph, degree);

  GroupHom diagonal = induced_at(fold, res_dom, res_two, degree);
  GroupHom both = induced_at(f_sqcup_g, res_h, res_two, degree);
  FiberProduct product = fiber_product(diagonal, both);

  GroupHom j_star = induced_at(tube.maps.at("embed_G_level1"), res_tube, res_dom, degree);
  GroupHom i_star = induced_at(tube.maps.at("embed_H"), res_tube, res_h, degree);
  GroupHom pair = pair_into_fiber(j_star, i_star, product);
  bool pass = pair.is_surjective();

  json instance;
  instance["f"] = map_to_json(f);
  instance["g"] = map_to_json(g);
  instance["degree"] = degree;
  json outcome;
  outcome["H(MT)"] = group_json(res_tube.groups[degree]);
  outcome["fiber_product"] = group_json(product.group);
  outcome["surjective"] = pass;
  return finish("tube", instance, pass, std::move(outcome),
                "H(MT) -> H(G) x_{H(G⊔G)} H(H) is onto");
}

// --- seeded generators --------------------------------------------------------

Digraph random_digraph(Rng& rng, std::size_t min_vertices, std::size_t max_vertices) {
  std::size_t n = min_vertices + rng.below(static_cast<std::uint32_t>(max_vertices - min_vertices + 1));
  std::uint32_t edge_percent = rng.percent(50) ? 30 : 50;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && rng.percent(edge_percent)) edges.emplace_back(labels[i], labels[j]);
  return Digraph(std::move(labels), std::move(edges));
}

namespace {

bool assignment_ok(const Digraph& dom, const Digraph& cod, const std::vector<VertexId>& images,
                   VertexId upto, VertexId v, VertexId w) {
  for (auto u : dom.out_neighbors(v))
    if (u < upto && w != images[u] && !cod.has_edge(w, images[u])) return false;
  for (auto u : dom.in_neighbors(v))
    if (u < upto && images[u] != w && !cod.has_edge(images[u], w)) return false;
  return true;
}

}  // namespace

DigraphMap random_map(Rng& rng, const Digraph& domain, const Digraph& codomain) {
  if (codomain.empty()) fail(Errc::empty_digraph, "random_map into the empty digraph");
  for (int attempt = 0; attempt < 60; ++attempt) {
    std::vector<VertexId> images(domain.vertex_count());
    bool dead = false;
    for (VertexId v = 0; v < domain.vertex_count() && !dead; ++v) {
      std::vector<VertexId> feasible;
      for (VertexId w = 0; w < codomain.vertex_count(); ++w)
        if (assignment_ok(domain, codomain, images, v, v, w)) feasible.push_back(w);
      if (feasible.empty())
        dead = true;
      else
        images[v] = feasible[rng.below(static_cast<std::uint32_t>(feasible.size()))];
    }
    if (!dead) return DigraphMap(domain, codomain, std::move(images));
  }
  return DigraphMap::constant(domain, codomain, rng.below(static_cast<std::uint32_t>(codomain.vertex_count())));
}

MvInstance random_decomposition(Rng& rng, const Digraph& g) {
  std::vector<std::string> v1, v2;
  std::vector<std::pair<std::string, std::string>> e1, e2;
  std::vector<bool> used(g.vertex_count(), false);
  for (const auto& [from, to] : g.edge_labels()) {
    std::uint32_t side = rng.below(3);
    if (side == 0 || side == 2) e1.emplace_back(from, to);
    if (side == 1 || side == 2) e2.emplace_back(from, to);
  }
  auto touch = [&](std::vector<std::string>& vs, const std::vector<std::pair<std::string, std::string>>& es) {
    std::set<std::string> seen;
    for (const auto& [a, b] : es) seen.insert(a), seen.insert(b);
    vs.assign(seen.begin(), seen.end());
    for (const auto& l : seen) used[g.index_of(l)] = true;
  };
  touch(v1, e1);
  touch(v2, e2);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::set<std::string> s1(v1.begin(), v1.end()), s2(v2.begin(), v2.end());
    const std::string& l = g.label(v);
    if (s1.count(l) || s2.count(l)) continue;
    std::uint32_t side = rng.below(3);
    if (side == 0 || side == 2) v1.push_back(l);
    if (side == 1 || side == 2) v2.push_back(l);
  }
  return make_mv_instance(g, Digraph(v1, e1), Digraph(v2, e2));
}

Homotopy random_walk_homotopy(Rng& rng, const DigraphMap& start, std::size_t steps) {
  const Digraph& dom = start.domain();
  const Digraph& cod = start.codomain();
  Homotopy h;
  h.domain = dom;
  h.codomain = cod;
  h.frames.push_back(start);
  std::string word;
  for (std::size_t s = 0; s < steps; ++s) {
    char orient = rng.percent(50) ? '+' : '-';
    const std::vector<VertexId>& cur = h.frames.back().images();
    std::vector<VertexId> best = cur;  // trivial step always works
    for (int attempt = 0; attempt < 30; ++attempt) {
      std::vector<VertexId> candidate(dom.vertex_count());
      bool ok = true;
      for (VertexId v = 0; v < dom.vertex_count() && ok; ++v) {
        const auto& moves = orient == '+' ? cod.out_neighbors(cur[v]) : cod.in_neighbors(cur[v]);
        std::uint32_t pick = rng.below(static_cast<std::uint32_t>(moves.size() + 1));
        candidate[v] = pick == 0 ? cur[v] : moves[pick - 1];
        ok = assignment_ok(dom, cod, candidate, v, v, candidate[v]);
      }
      if (ok) {
        best = std::move(candidate);
        break;
      }
    }
    word += orient;
    h.frames.emplace_back(dom, cod, std::move(best));
  }
  h.line = LineDigraph(word);
  return h;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"triviality", "additivity", "mv", "cochain",
                                              "cone", "four-term", "tube"};
  return names;
}

std::vector<CheckReport> run_suite(const std::string& which, const SuiteOptions& options) {
  std::vector<CheckReport> reports;
  auto run_one = [&](const std::string& name) {
    if (name == "triviality") {
      reports.push_back(check_triviality());
      return;
    }
    for (std::size_t i = 0; i < options.count; ++i) {
      std::uint64_t seed = instance_seed(options.seed, i);
      Rng rng(seed);
      CheckReport report;
      if (name == "additivity") {
        Digraph g = random_digraph(rng, options.min_size, options.max_size);
        Digraph h = random_digraph(rng, options.min_size, options.max_size);
        report = check_additivity(g, h, options.degree);
      } else if (name == "mv") {
        MvInstance inst = random_decomposition(rng, random_digraph(rng, options.min_size, options.max_size));
        report = check_mv_surjectivity(inst, options.degree);
      } else if (name == "cochain") {
        MvInstance inst = random_decomposition(rng, random_digraph(rng, options.min_size, options.max_size));
        report = check_cochain_lemmas(inst);
      } else if (name == "cone") {
        Digraph g = random_digraph(rng, options.min_size, options.max_size);
        Digraph h = random_digraph(rng, options.min_size, options.max_size);
        report = check_cone_exactness(random_map(rng, g, h), options.degree);
      } else if (name == "four-term") {
        MvInstance inst = random_decomposition(rng, random_digraph(rng, options.min_size, options.max_size));
        report = check_four_term(inst.g1, inst.g2, options.degree);
      } else if (name == "tube") {
        Digraph g = random_digraph(rng, options.min_size, options.max_size);
        Digraph h = random_digraph(rng, options.min_size, options.max_size);
        DigraphMap f1 = random_map(rng, g, h);
        DigraphMap f2 = random_map(rng, g, h);
        report = check_tube_surjectivity(f1, f2, options.degree);
      } else {
        fail(Errc::parse, "unknown check '" + name + "'");
      }
      report.seed = seed;
      reports.push_back(std::move(report));
    }
  };
  if (which == "all") {
    for (const auto& name : suite_names()) run_one(name);
  } else {
    run_one(which);
  }
  return reports;
}

}  // namespace dgh
