#include "dgh/digraph.hpp"

#include <set>

#include "dgh/brown.hpp"
#include <nlohmann/json.hpp>

#include "dgh/json_io.hpp"
#include "doctest.h"

using namespace dgh;

namespace {

Digraph line_abc() { return Digraph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }

Digraph cycle4() {
  return Digraph({"0", "1", "2", "3"}, {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "0"}});
}

}  // namespace

TEST_CASE("digraph validation") {
  Digraph g = line_abc();
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge("a", "b"));
  CHECK_FALSE(g.has_edge("b", "a"));

  CHECK_THROWS_WITH_AS(Digraph({"a"}, {{"a", "a"}}), doctest::Contains("self-loop"), Error);
  CHECK_THROWS_AS(Digraph({"a", "a"}, {}), Error);
  CHECK_THROWS_AS(Digraph({"a"}, {{"a", "b"}}), Error);

  Digraph empty;
  CHECK(empty.vertex_count() == 0);
  CHECK(empty.edge_count() == 0);
  CHECK(Digraph({}, {}) == empty);

  // duplicate edges collapse to a set
  Digraph dup({"a", "b"}, {{"a", "b"}, {"a", "b"}});
  CHECK(dup.edge_count() == 1);
}

TEST_CASE("digraph map validation") {
  Digraph g = line_abc();
  Digraph h = cycle4();
  DigraphMap f = DigraphMap::from_labels(g, h, {{"a", "0"}, {"b", "1"}, {"c", "1"}});
  CHECK(f.image_label("a") == "0");
  CHECK(f.image_label("c") == "1");

  CHECK(DigraphMap::identity(g) == DigraphMap::from_labels(g, g, {{"a", "a"}, {"b", "b"}, {"c", "c"}}));

  Digraph ab({"a", "b"}, {{"a", "b"}});
  Digraph zo({"0", "1"}, {{"0", "1"}});
  CHECK_THROWS_WITH_AS(DigraphMap::from_labels(ab, zo, {{"a", "1"}, {"b", "0"}}),
                       doctest::Contains("(a,b)"), Error);
  CHECK_THROWS_AS(DigraphMap::from_labels(ab, zo, {{"a", "1"}}), Error);
}

TEST_CASE("union and intersection") {
  Digraph ab({"a", "b"}, {{"a", "b"}});
  Digraph bc({"b", "c"}, {{"b", "c"}});
  CHECK(union_of(ab, bc) == line_abc());

  Digraph both({"0", "1"}, {{"0", "1"}});
  Digraph rev({"0", "1"}, {{"1", "0"}});
  CHECK(union_of(both, rev) == Digraph({"0", "1"}, {{"0", "1"}, {"1", "0"}}));

  Digraph bcd({"b", "c", "d"}, {{"b", "c"}, {"c", "d"}});
  CHECK(intersection_of(line_abc(), bcd) == Digraph({"b", "c"}, {{"b", "c"}}));

  // vertices overlap, edges do not
  Digraph left({"x", "y"}, {{"x", "y"}});
  Digraph right({"x", "y"}, {{"y", "x"}});
  CHECK(intersection_of(left, right) == Digraph({"x", "y"}, {}));
}

TEST_CASE("union and intersection laws on random digraphs") {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Digraph a = random_digraph(rng, 1, 5);
    Digraph b = random_digraph(rng, 1, 5);
    Digraph c = random_digraph(rng, 1, 5);
    CHECK(union_of(a, b) == union_of(b, a));
    CHECK(intersection_of(a, b) == intersection_of(b, a));
    CHECK(union_of(a, union_of(b, c)) == union_of(union_of(a, b), c));
    CHECK(intersection_of(a, intersection_of(b, c)) == intersection_of(intersection_of(a, b), c));
    CHECK(union_of(a, a) == a);
    CHECK(intersection_of(a, a) == a);
  }
}

TEST_CASE("disjoint union tags and injects") {
  Digraph ab({"a", "b"}, {{"a", "b"}});
  Coproduct cop = disjoint_union(ab, ab);
  CHECK(cop.digraph.vertex_count() == 4);
  CHECK(cop.digraph.edge_count() == 2);
  CHECK(cop.inject_left.image_label("a") == "L:a");
  CHECK(cop.inject_right.image_label("a") == "R:a");

  Coproduct points = disjoint_union(Digraph::singleton("p"), Digraph::singleton("p"));
  CHECK(points.digraph.vertex_count() == 2);
  CHECK(points.digraph.edge_count() == 0);

  Coproduct with_empty = disjoint_union(ab, Digraph{});
  CHECK(with_empty.digraph.vertex_count() == 2);
  CHECK(with_empty.digraph.edge_count() == 1);

  // injections jointly cover the vertices
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Digraph a = random_digraph(rng, 1, 4);
    Digraph b = random_digraph(rng, 1, 4);
    Coproduct cp = disjoint_union(a, b);
    std::set<std::string> hit;
    for (VertexId v = 0; v < a.vertex_count(); ++v)
      hit.insert(cp.digraph.label(cp.inject_left(v)));
    for (VertexId v = 0; v < b.vertex_count(); ++v)
      hit.insert(cp.digraph.label(cp.inject_right(v)));
    CHECK(hit.size() == cp.digraph.vertex_count());
  }
}

TEST_CASE("box product") {
  Digraph ab({"a", "b"}, {{"a", "b"}});
  Digraph iplus = LineDigraph("+").to_digraph();
  Digraph square = box_product(ab, iplus);
  CHECK(square.vertex_count() == 4);
  CHECK(square.edge_count() == 4);
  CHECK(square.has_edge("(a,0)", "(a,1)"));
  CHECK(square.has_edge("(a,0)", "(b,0)"));

  Digraph triangle({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  Digraph prism = box_product(triangle, iplus);
  CHECK(prism.vertex_count() == 6);
  CHECK(prism.edge_count() == 9);

  Digraph slice = box_product(line_abc(), Digraph::singleton("pt"));
  CHECK(slice.vertex_count() == 3);
  CHECK(slice.edge_count() == 2);
  CHECK(slice.has_edge("(a,pt)", "(b,pt)"));

  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Digraph g = random_digraph(rng, 1, 4);
    Digraph h = random_digraph(rng, 1, 4);
    Digraph p = box_product(g, h);
    CHECK(p.vertex_count() == g.vertex_count() * h.vertex_count());
    CHECK(p.edge_count() ==
          g.vertex_count() * h.edge_count() + g.edge_count() * h.vertex_count());
  }
}

TEST_CASE("quotient") {
  Digraph g = line_abc();
  QuotientResult q = quotient(g, {{"a", "b"}, {"c"}});
  CHECK(q.digraph == Digraph({"a", "c"}, {{"a", "c"}}));  // the a->b edge is dropped
  CHECK(q.projection.image_label("b") == "a");

  QuotientResult trivial = quotient(g, {{"a"}, {"b"}, {"c"}});
  CHECK(trivial.digraph == g);

  QuotientResult point = quotient(g, {{"a", "b", "c"}});
  CHECK(point.digraph == Digraph({"a"}, {}));

  CHECK_THROWS_AS(quotient(g, {{"a", "b"}}), Error);
  CHECK_THROWS_AS(quotient(g, {{"a", "b"}, {"b", "c"}}), Error);

  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    Digraph r = random_digraph(rng, 2, 6);
    std::vector<std::vector<std::string>> classes(1 + rng.below(3));
    for (VertexId v = 0; v < r.vertex_count(); ++v)
      classes[rng.below(static_cast<std::uint32_t>(classes.size()))].push_back(r.label(v));
    classes.erase(std::remove_if(classes.begin(), classes.end(),
                                 [](const auto& c) { return c.empty(); }),
                  classes.end());
    QuotientResult qr = quotient(r, classes);  // projection validates on construction
    CHECK(qr.projection.domain() == r);
  }
}

TEST_CASE("induced subdigraph") {
  Digraph g = line_abc();
  CHECK(induced_subdigraph(g, {"b", "c"}) == Digraph({"b", "c"}, {{"b", "c"}}));
  CHECK(induced_subdigraph(g, {"a", "b", "c"}) == g);
  CHECK(induced_subdigraph(g, {}) == Digraph{});
  CHECK_THROWS_AS(induced_subdigraph(g, {"z"}), Error);
}

TEST_CASE("image2 and image digraph") {
  Digraph g = line_abc();
  Digraph h = cycle4();
  DigraphMap f = DigraphMap::from_labels(g, h, {{"a", "0"}, {"b", "1"}, {"c", "1"}});
  CHECK(image2(f) == std::vector<std::string>{"1"});
  CHECK(image_digraph(f) == Digraph({"0", "1"}, {{"0", "1"}}));

  DigraphMap id = DigraphMap::identity(g);
  CHECK(image2(id).empty());

  DigraphMap c = DigraphMap::constant(g, h, 2);
  CHECK(image2(c) == std::vector<std::string>{"2"});
}

TEST_CASE("composition of valid maps is valid") {
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    Digraph a = random_digraph(rng, 1, 4);
    Digraph b = random_digraph(rng, 1, 4);
    Digraph c = random_digraph(rng, 1, 4);
    DigraphMap f = random_map(rng, a, b);
    DigraphMap g = random_map(rng, b, c);
    DigraphMap gf = compose(g, f);  // construction revalidates
    CHECK(gf.domain() == a);
    CHECK(gf.codomain() == c);
    for (VertexId v = 0; v < a.vertex_count(); ++v) CHECK(gf(v) == g(f(v)));
  }
  Digraph x({"x"}, {});
  CHECK_THROWS_AS(compose(DigraphMap::identity(x), DigraphMap::identity(line_abc())), Error);
}

TEST_CASE("line digraphs") {
  LineDigraph l("+-");
  Digraph d = l.to_digraph();
  CHECK(d.vertex_count() == 3);
  CHECK(d.has_edge("0", "1"));
  CHECK(d.has_edge("2", "1"));
  CHECK_THROWS_AS(LineDigraph("+x"), Error);

  LineDigraph longline(std::string(12, '+'));
  Digraph ld = longline.to_digraph();
  CHECK(ld.vertex_count() == 13);
  CHECK(ld.has_edge("09", "10"));  // zero-padded labels keep the order
}

TEST_CASE("weak components") {
  Digraph g({"a", "b", "c", "d"}, {{"a", "b"}, {"d", "c"}});
  CHECK(g.weak_components().size() == 2);
  CHECK(Digraph{}.weak_components().empty());
}

TEST_CASE("json round trip") {
  Rng rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    Digraph g = random_digraph(rng, 0, 5);
    CHECK(digraph_from_json(digraph_to_json(g)) == g);
    if (!g.empty()) {
      DigraphMap f = random_map(rng, g, g);
      DigraphMap back = map_from_json(map_to_json(f));
      CHECK(back == f);
    }
  }
  CHECK_THROWS_AS(digraph_from_text("{\"vertices\": [1]}"), Error);
  CHECK_THROWS_AS(digraph_from_text("not json"), Error);
}

TEST_CASE("dot import and export") {
  Digraph g = import_dot("digraph G { a -> b -> c; d; }");
  CHECK(g == Digraph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}}));

  CHECK_THROWS_AS(import_dot("digraph { a -> a; }"), Error);
  CHECK_THROWS_AS(import_dot("digraph { a -> b; a -> b; }"), Error);
  CHECK_THROWS_AS(import_dot("graph { a -- b; }"), Error);

  Digraph quoted = import_dot("digraph { \"x y\" -> z [color=red]; }");
  CHECK(quoted.has_edge("x y", "z"));

  CHECK(import_dot(export_dot(line_abc())) == line_abc());
}
