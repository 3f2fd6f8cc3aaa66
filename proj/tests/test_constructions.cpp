#include "dgh/constructions.hpp"

#include "dgh/brown.hpp"
#include "doctest.h"

using namespace dgh;

namespace {

Digraph line_abc() { return Digraph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }

Digraph cycle4() {
  return Digraph({"0", "1", "2", "3"}, {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "0"}});
}

// the running example: a->b->c into the 4-cycle, b and c both land on 1
DigraphMap fig_map() {
  return DigraphMap::from_labels(line_abc(), cycle4(), {{"a", "0"}, {"b", "1"}, {"c", "1"}});
}

DigraphMap fig_map_second() {
  return DigraphMap::from_labels(line_abc(), cycle4(), {{"a", "1"}, {"b", "2"}, {"c", "2"}});
}

}  // namespace

TEST_CASE("cone") {
  ConstructionResult point = cone(Digraph::singleton("p"));
  CHECK(point.result == Digraph({"(p,0)", "*"}, {{"*", "(p,0)"}}));

  ConstructionResult edge = cone(Digraph({"a", "b"}, {{"a", "b"}}));
  CHECK(edge.result.vertex_count() == 3);
  CHECK(edge.result.edge_count() == 3);
  CHECK(edge.result.has_edge("(a,0)", "(b,0)"));
  CHECK(edge.result.has_edge("*", "(a,0)"));
  CHECK(edge.result.has_edge("*", "(b,0)"));
  CHECK(edge.maps.at("embed_base").image_label("a") == "(a,0)");

  ConstructionResult empty = cone(Digraph{});
  CHECK(empty.result == Digraph({"*"}, {}));
}

TEST_CASE("mapping cylinder") {
  ConstructionResult cyl = mapping_cylinder(fig_map());
  CHECK(cyl.result ==
        Digraph({"0", "1", "2", "3", "(a,1)", "(b,1)", "(c,1)"},
                {{"0", "1"},
                 {"1", "2"},
                 {"2", "3"},
                 {"3", "0"},
                 {"(a,1)", "(b,1)"},
                 {"(b,1)", "(c,1)"},
                 {"(a,1)", "0"},
                 {"(b,1)", "1"},
                 {"(c,1)", "1"}}));

  Digraph g = line_abc();
  ConstructionResult of_identity = mapping_cylinder(DigraphMap::identity(g));
  CHECK(of_identity.result.vertex_count() == 2 * g.vertex_count());
  CHECK(of_identity.result.edge_count() == 2 * g.edge_count() + g.vertex_count());

  ConstructionResult of_constant = mapping_cylinder(DigraphMap::constant(g, cycle4(), 2));
  CHECK(of_constant.result.vertex_count() == 7);
  CHECK(of_constant.result.edge_count() == 4 + 2 + 3);
}

TEST_CASE("modified mapping cylinder") {
  ConstructionResult mod = modified_mapping_cylinder(fig_map());
  CHECK(mod.result.vertex_count() == 7);
  CHECK(mod.result.edge_count() == 10);
  CHECK(mod.result.has_edge("(a,1)", "1"));  // the single bridge edge

  // restricted to the plain cylinder's edges it is the plain cylinder
  ConstructionResult plain = mapping_cylinder(fig_map());
  CHECK(is_subdigraph(plain.result, mod.result));
  CHECK(plain.result.labels() == mod.result.labels());

  // injective maps add nothing
  Digraph two({"x", "y"}, {{"x", "y"}});
  DigraphMap inj = DigraphMap::from_labels(two, cycle4(), {{"x", "0"}, {"y", "1"}});
  CHECK(modified_mapping_cylinder(inj).result == mapping_cylinder(inj).result);

  // constant map onto an isolated vertex: no image edges, nothing to bridge
  Digraph iso({"0", "1", "z"}, {{"0", "1"}});
  DigraphMap to_iso = DigraphMap::constant(line_abc(), iso, iso.index_of("z"));
  CHECK(modified_mapping_cylinder(to_iso).result == mapping_cylinder(to_iso).result);

  // crush projects the slice back onto the codomain
  CHECK(mod.maps.at("crush").image_label("(b,1)") == "1");
  CHECK(mod.maps.at("crush").image_label("3") == "3");
}

TEST_CASE("modified cone") {
  ConstructionResult mc = modified_cone(fig_map());
  CHECK(mc.result.vertex_count() == 5);
  CHECK(mc.result.edge_count() == 10);
  CHECK(mc.result.has_vertex("1"));
  CHECK_FALSE(mc.result.has_vertex("0"));
  CHECK(mc.result.has_edge("*", "1"));      // 1 receives from the apex
  CHECK(mc.result.has_edge("(b,0)", "1"));  // least preimage section
  CHECK(mc.choices == SectionChoices{{"1", "b"}});

  ConstructionResult figure_choice = modified_cone(fig_map(), {{"1", "c"}});
  CHECK(figure_choice.result.vertex_count() == 5);
  CHECK(figure_choice.result.edge_count() == 10);
  CHECK(figure_choice.result.has_edge("(c,0)", "1"));
  CHECK_FALSE(figure_choice.result.has_edge("(b,0)", "1"));

  CHECK_THROWS_AS(modified_cone(fig_map(), {{"1", "a"}}), Error);  // a is not a preimage of 1

  // injective map: just the cone with the upward edges added
  Digraph two({"x", "y"}, {{"x", "y"}});
  DigraphMap inj = DigraphMap::from_labels(two, cycle4(), {{"x", "0"}, {"y", "1"}});
  ConstructionResult plain = modified_cone(inj);
  CHECK(plain.choices.empty());
  CHECK(plain.result.vertex_count() == 3);
  CHECK(plain.result.edge_count() == cone(two).result.edge_count() + two.vertex_count());

  // edgeless image: no designated vertices either
  Digraph edgeless({"p", "q"}, {});
  ConstructionResult flat = modified_cone(DigraphMap::constant(line_abc(), edgeless, 0));
  CHECK(flat.choices.empty());
}

TEST_CASE("modified mapping cone matches the worked example") {
  ConstructionResult cof = modified_mapping_cone(fig_map());
  Digraph expected({"0", "1", "2", "3", "(a,1)", "(b,1)", "(c,1)", "*"},
                   {// codomain square
                    {"0", "1"},
                    {"1", "2"},
                    {"2", "3"},
                    {"3", "0"},
                    // middle slice
                    {"(a,1)", "(b,1)"},
                    {"(b,1)", "(c,1)"},
                    // cylinder verticals and the bridge
                    {"(a,1)", "0"},
                    {"(b,1)", "1"},
                    {"(c,1)", "1"},
                    {"(a,1)", "1"},
                    // cone part around the apex
                    {"*", "(a,1)"},
                    {"*", "(b,1)"},
                    {"*", "(c,1)"},
                    {"(a,1)", "*"},
                    {"(b,1)", "*"},
                    {"(c,1)", "*"},
                    {"*", "1"}});
  CHECK(cof.result == expected);

  // decomposition into the two embedded parts is exact
  Digraph cone_image = image_digraph(cof.maps.at("embed_cone_part"));
  Digraph cyl_image = image_digraph(cof.maps.at("embed_cyl_part"));
  CHECK(union_of(cone_image, cyl_image) == cof.result);

  Digraph overlap = intersection_of(cone_image, cyl_image);
  CHECK(overlap == Digraph({"(a,1)", "(b,1)", "(c,1)", "1"},
                           {{"(a,1)", "(b,1)"}, {"(b,1)", "(c,1)"}, {"(b,1)", "1"}}));

  // with the section forced to c, the overlap runs through c instead
  ConstructionResult forced = modified_mapping_cone(fig_map(), {{"1", "c"}});
  CHECK(forced.result == expected);  // the section edge is absorbed either way
  Digraph forced_overlap = intersection_of(image_digraph(forced.maps.at("embed_cone_part")),
                                           image_digraph(forced.maps.at("embed_cyl_part")));
  CHECK(forced_overlap == Digraph({"(a,1)", "(b,1)", "(c,1)", "1"},
                                  {{"(a,1)", "(b,1)"}, {"(b,1)", "(c,1)"}, {"(c,1)", "1"}}));

  // identity on a point: both vertical edges plus the apex
  Digraph pt = Digraph::singleton("v");
  ConstructionResult tiny = modified_mapping_cone(DigraphMap::identity(pt));
  CHECK(tiny.result ==
        Digraph({"v", "(v,1)", "*"}, {{"(v,1)", "v"}, {"*", "(v,1)"}, {"(v,1)", "*"}}));
}

TEST_CASE("mapping tube matches the worked example") {
  ConstructionResult tube = mapping_tube(fig_map(), fig_map_second());
  CHECK(tube.result.vertex_count() == 10);
  CHECK(tube.result.edge_count() == 17);
  CHECK(tube.result.has_edge("(a,1)", "0"));
  CHECK(tube.result.has_edge("(a,1)", "(a,2)"));
  CHECK(tube.result.has_edge("(a,2)", "1"));
  CHECK(tube.result.has_edge("(b,2)", "2"));
  CHECK(tube.maps.at("embed_G_level1").image_label("a") == "(a,1)");
  CHECK(tube.maps.at("embed_G_level2").image_label("a") == "(a,2)");

  // equal maps both ways: three stacked copies of the codomain's vertex set
  DigraphMap id4 = DigraphMap::identity(cycle4());
  CHECK(mapping_tube(id4, id4).result.vertex_count() == 3 * 4);

  // a point hangs a two-vertex path between the two image vertices
  Digraph pt = Digraph::singleton("p");
  DigraphMap at0 = DigraphMap::constant(pt, cycle4(), 0);
  DigraphMap at2 = DigraphMap::constant(pt, cycle4(), 2);
  ConstructionResult hang = mapping_tube(at0, at2);
  CHECK(hang.result.vertex_count() == 6);
  CHECK(hang.result.has_edge("(p,1)", "0"));
  CHECK(hang.result.has_edge("(p,1)", "(p,2)"));
  CHECK(hang.result.has_edge("(p,2)", "2"));

  Digraph other({"q"}, {});
  CHECK_THROWS_AS(mapping_tube(at0, DigraphMap::constant(other, cycle4(), 0)), Error);
}

TEST_CASE("tube decomposition") {
  TubeDecomposition parts = tube_decomposition(fig_map(), fig_map_second());
  CHECK(union_of(parts.cylinder_part, parts.product_part) == parts.tube);
  CHECK(parts.intersection == intersection_of(parts.cylinder_part, parts.product_part));
  CHECK(parts.intersection.vertex_count() == 2 * 3);
  CHECK(parts.intersection.edge_count() == 2 * 2);
  CHECK(parts.intersection.has_edge("(a,1)", "(b,1)"));
  CHECK(parts.intersection.has_edge("(a,2)", "(b,2)"));
  CHECK_FALSE(parts.intersection.has_edge("(a,1)", "(a,2)"));

  Rng rng(77);
  for (int trial = 0; trial < 15; ++trial) {
    Digraph g = random_digraph(rng, 1, 4);
    Digraph h = random_digraph(rng, 1, 4);
    DigraphMap f1 = random_map(rng, g, h);
    DigraphMap f2 = random_map(rng, g, h);
    TubeDecomposition d = tube_decomposition(f1, f2);
    CHECK(union_of(d.cylinder_part, d.product_part) == d.tube);
    CHECK(intersection_of(d.cylinder_part, d.product_part) == d.intersection);
    CHECK(d.intersection.vertex_count() == 2 * g.vertex_count());
  }
}

TEST_CASE("s-digraph over the intersection") {
  Digraph g = line_abc();
  Digraph h({"b", "c", "d"}, {{"b", "c"}, {"c", "d"}});
  ConstructionResult s = s_digraph(g, h);

  Digraph expected({"b", "c", "(L:b,1)", "(L:c,1)", "(R:b,1)", "(R:c,1)", "*"},
                   {{"b", "c"},
                    {"(L:b,1)", "(L:c,1)"},
                    {"(R:b,1)", "(R:c,1)"},
                    {"(L:b,1)", "b"},
                    {"(L:c,1)", "c"},
                    {"(R:b,1)", "b"},
                    {"(R:c,1)", "c"},
                    {"(L:b,1)", "*"},
                    {"(L:c,1)", "*"},
                    {"(R:b,1)", "*"},
                    {"(R:c,1)", "*"},
                    {"*", "(L:b,1)"},
                    {"*", "(L:c,1)"},
                    {"*", "(R:b,1)"},
                    {"*", "(R:c,1)"},
                    {"*", "b"},
                    {"c", "*"}});
  CHECK(s.result == expected);

  const DigraphMap& include = s.maps.at("include");
  const DigraphMap& retract = s.maps.at("retract");
  CHECK(include.codomain().vertex_count() == 11);  // the ambient mapping cone
  CHECK(include.codomain().edge_count() == 29);
  CHECK(compose(retract, include) == DigraphMap::identity(s.result));

  // empty intersection collapses to the apex alone
  Digraph far({"x", "y"}, {{"x", "y"}});
  ConstructionResult apex_only = s_digraph(g, far);
  CHECK(apex_only.result == Digraph({"*"}, {}));

  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    Digraph a = random_digraph(rng, 1, 4);
    Digraph b = random_digraph(rng, 1, 4);
    ConstructionResult sr = s_digraph(a, b);
    CHECK(compose(sr.maps.at("retract"), sr.maps.at("include")) ==
          DigraphMap::identity(sr.result));
  }
}

TEST_CASE("generated labels may not collide with input labels") {
  Digraph tricky({"(a,1)", "z"}, {});
  Digraph just_a({"a"}, {});
  DigraphMap f = DigraphMap::constant(just_a, tricky, tricky.index_of("z"));
  CHECK_THROWS_AS(mapping_cylinder(f), Error);

  // a codomain vertex named "*" pushes the apex to the next free label
  Digraph star_target({"*", "m"}, {{"m", "*"}});
  Digraph source({"p", "q", "r"}, {{"p", "q"}});
  DigraphMap onto_star =
      DigraphMap::from_labels(source, star_target, {{"p", "m"}, {"q", "*"}, {"r", "*"}});
  ConstructionResult dodged = modified_cone(onto_star);
  CHECK(dodged.apex == "**");
  CHECK(dodged.result.has_edge("**", "*"));  // apex edge into the designated vertex

  // a designated vertex whose label collides with a base slice label
  Digraph slice_target({"(q,0)", "m"}, {{"m", "(q,0)"}});
  DigraphMap onto_slice = DigraphMap::from_labels(
      source, slice_target, {{"p", "m"}, {"q", "(q,0)"}, {"r", "(q,0)"}});
  CHECK_THROWS_AS(modified_cone(onto_slice), Error);
}

TEST_CASE("iterated cones pick fresh apexes") {
  Digraph pt = Digraph::singleton("v");
  ConstructionResult first = modified_mapping_cone(DigraphMap::identity(pt));
  CHECK(first.apex == "*");
  ConstructionResult second =
      modified_mapping_cone(DigraphMap::constant(Digraph::singleton("w"), first.result,
                                                 first.result.index_of("v")));
  CHECK(second.apex == "**");
  CHECK(second.result.has_vertex("*"));
  CHECK(second.result.has_vertex("**"));

  // iterating on a cone whose slice labels reappear in the domain is the
  // one shape the labeling scheme rejects
  CHECK_THROWS_AS(modified_mapping_cone(first.maps.at("embed_H")), Error);
}
