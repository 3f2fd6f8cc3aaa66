#include "dgh/brown.hpp"

#include <nlohmann/json.hpp>

#include "dgh/path_homology.hpp"
#include "doctest.h"

using namespace dgh;

namespace {

Digraph line_abc() { return Digraph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }

Digraph cycle4() {
  return Digraph({"0", "1", "2", "3"}, {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "0"}});
}

Digraph transitive_triangle() {
  return Digraph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

// the 4-cycle split into its two directed halves, sharing both endpoints
MvInstance half_split() {
  Digraph g = cycle4();
  Digraph upper({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}});
  Digraph lower({"0", "2", "3"}, {{"2", "3"}, {"3", "0"}});
  return make_mv_instance(g, upper, lower);
}

}  // namespace

TEST_CASE("rng is stable") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng c(42);
  CHECK(c.next() == 13679457532755275413ull);  // frozen stream head
}

TEST_CASE("mv instance validation") {
  CHECK_THROWS_AS(make_mv_instance(cycle4(), line_abc(), line_abc()), Error);
  MvInstance inst = half_split();
  CHECK(union_of(inst.g1, inst.g2) == inst.g);
}

TEST_CASE("triviality") {
  CheckReport report = check_triviality();
  CHECK(report.pass);
  CHECK(report.check == "triviality");
}

TEST_CASE("additivity") {
  CheckReport report = check_additivity(cycle4(), transitive_triangle());
  CHECK(report.pass);
  nlohmann::json witness = nlohmann::json::parse(report.witness_json);
  CHECK(witness["outcome"]["H(G+H)"]["rank"] == 1);
  CHECK(witness["outcome"]["H(H)"]["rank"] == 0);

  CHECK(check_additivity(cycle4(), Digraph{}).pass);
  CHECK(check_additivity(Digraph::singleton("p"), Digraph::singleton("q")).pass);
}

TEST_CASE("mayer-vietoris surjectivity") {
  CHECK(check_mv_surjectivity(half_split()).pass);

  // G2 empty: the fiber product collapses to H1(G)
  Digraph g = cycle4();
  CHECK(check_mv_surjectivity(make_mv_instance(g, g, Digraph{})).pass);

  Rng rng(2025);
  for (int trial = 0; trial < 25; ++trial) {
    MvInstance inst = random_decomposition(rng, random_digraph(rng, 3, 6));
    CheckReport report = check_mv_surjectivity(inst);
    // failures occur for some decompositions (see the pinned case below);
    // every verdict must come with a reproducible witness either way
    CHECK(!report.witness_json.empty());
    CHECK(report.digest == check_mv_surjectivity(inst).digest);
  }
}

// For arbitrary edge decompositions the surjectivity claim is false: an
// allowed 2-path can cross from a G1-only edge into a G2-only edge while a
// shortcut edge exists in G, giving an Omega_2(G) chain that no glued
// cochain has to kill.  In this instance the crossing path is v5->v0->v4
// with shortcut v5->v4, forcing H1(G) = 0 against a rank-1 fiber product.
TEST_CASE("mv surjectivity fails for crossing-path decompositions") {
  Digraph g({"v0", "v1", "v2", "v3", "v4", "v5"},
            {{"v0", "v2"},
             {"v0", "v3"},
             {"v0", "v4"},
             {"v1", "v5"},
             {"v3", "v0"},
             {"v5", "v0"},
             {"v5", "v3"},
             {"v5", "v4"}});
  Digraph g1({"v0", "v1", "v3", "v5"},
             {{"v0", "v3"}, {"v1", "v5"}, {"v3", "v0"}, {"v5", "v0"}, {"v5", "v3"}});
  Digraph g2({"v0", "v1", "v2", "v3", "v4", "v5"},
             {{"v0", "v2"}, {"v0", "v4"}, {"v1", "v5"}, {"v3", "v0"}, {"v5", "v3"},
              {"v5", "v4"}});
  MvInstance inst = make_mv_instance(g, g1, g2);

  CHECK(cohomology(g, 1).groups[1].is_trivial());
  CHECK(cohomology(g1, 1).groups[1].is_trivial());
  CHECK(cohomology(g2, 1).groups[1].describe() == "Z");
  CHECK(cohomology(intersection_of(g1, g2), 1).groups[1].is_trivial());

  CheckReport report = check_mv_surjectivity(inst);
  CHECK_FALSE(report.pass);
  // the two cochain-level lemmas still hold on the same instance
  CHECK(check_cochain_lemmas(inst).pass);
}

TEST_CASE("cochain lemmas") {
  CHECK(check_cochain_lemmas(half_split()).pass);

  // G1 = G2 = G: the difference map is zero, the kernel is everything
  Digraph g = cycle4();
  CHECK(check_cochain_lemmas(make_mv_instance(g, g, g)).pass);

  // disjoint parts: the intersection target is trivial
  Digraph two({"x", "y"}, {});
  MvInstance disjoint = make_mv_instance(two, Digraph({"x"}, {}), Digraph({"y"}, {}));
  CHECK(check_cochain_lemmas(disjoint).pass);

  Rng rng(515);
  for (int trial = 0; trial < 25; ++trial) {
    MvInstance inst = random_decomposition(rng, random_digraph(rng, 3, 6));
    CHECK(check_cochain_lemmas(inst).pass);
  }
}

TEST_CASE("cone exactness") {
  DigraphMap fig = DigraphMap::from_labels(line_abc(), cycle4(),
                                           {{"a", "0"}, {"b", "1"}, {"c", "1"}});
  CheckReport report = check_cone_exactness(fig);
  CHECK(report.pass);

  CHECK(check_cone_exactness(DigraphMap::identity(cycle4())).pass);

  Rng rng(626);
  for (int trial = 0; trial < 20; ++trial) {
    Digraph g = random_digraph(rng, 3, 5);
    Digraph h = random_digraph(rng, 3, 5);
    CHECK(check_cone_exactness(random_map(rng, g, h)).pass);
  }
}

TEST_CASE("four-term sequence") {
  Digraph g = line_abc();
  Digraph h({"b", "c", "d"}, {{"b", "c"}, {"c", "d"}});
  CHECK(check_four_term(g, h).pass);
  CHECK(check_four_term(g, Digraph{}).pass);

  Rng rng(737);
  for (int trial = 0; trial < 8; ++trial) {
    MvInstance inst = random_decomposition(rng, random_digraph(rng, 3, 5));
    CheckReport report = check_four_term(inst.g1, inst.g2);
    CHECK(!report.witness_json.empty());
  }
}

// Covering a directed triangle by two 2-edge paths kills H1 in the mapping
// cone: ker(fold*) is all of H1(triangle) = Z but nothing maps onto it, so
// exactness at the union fails for this overlapping pair.
TEST_CASE("four-term exactness fails on a triangle covered by two paths") {
  Digraph g({"v0", "v1", "v2", "v3"}, {{"v0", "v2"}, {"v3", "v0"}});
  Digraph h({"v0", "v1", "v2", "v3"}, {{"v0", "v2"}, {"v2", "v3"}});
  CHECK(cohomology(union_of(g, h), 1).groups[1].describe() == "Z");

  CheckReport report = check_four_term(g, h);
  CHECK_FALSE(report.pass);
  nlohmann::json witness = nlohmann::json::parse(report.witness_json);
  CHECK(witness["outcome"]["exact_at_union"] == false);
  CHECK(witness["outcome"]["exact_at_cone"] == true);
}

TEST_CASE("tube surjectivity") {
  DigraphMap f = DigraphMap::from_labels(line_abc(), cycle4(),
                                         {{"a", "0"}, {"b", "1"}, {"c", "1"}});
  DigraphMap g = DigraphMap::from_labels(line_abc(), cycle4(),
                                         {{"a", "1"}, {"b", "2"}, {"c", "2"}});
  CHECK(check_tube_surjectivity(f, g).pass);
  CHECK(check_tube_surjectivity(f, f).pass);

  Rng rng(848);
  for (int trial = 0; trial < 12; ++trial) {
    Digraph dom = random_digraph(rng, 3, 5);
    Digraph cod = random_digraph(rng, 3, 5);
    DigraphMap f1 = random_map(rng, dom, cod);
    DigraphMap f2 = random_map(rng, dom, cod);
    CHECK(check_tube_surjectivity(f1, f2).pass);
  }
}

TEST_CASE("mv specializes to additivity on disjoint pieces") {
  Rng rng(959);
  for (int trial = 0; trial < 10; ++trial) {
    Digraph a = random_digraph(rng, 3, 4);
    Digraph b = random_digraph(rng, 3, 4);
    Coproduct cop = disjoint_union(a, b);
    Digraph left = image_digraph(cop.inject_left);
    Digraph right = image_digraph(cop.inject_right);
    MvInstance inst = make_mv_instance(cop.digraph, left, right);
    CheckReport mv = check_mv_surjectivity(inst);
    CheckReport add = check_additivity(a, b);
    CHECK(mv.pass == add.pass);
    CHECK(mv.pass);
  }
}

TEST_CASE("suite runner") {
  SuiteOptions options;
  options.seed = 42;
  options.count = 3;
  options.max_size = 5;
  std::vector<CheckReport> reports = run_suite("mv", options);
  REQUIRE(reports.size() == 3);
  for (const auto& r : reports) CHECK(r.seed != 0);

  // same seed, same digests: replayable bit-exactly
  std::vector<CheckReport> again = run_suite("mv", options);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].pass == again[i].pass);
    CHECK(reports[i].digest == again[i].digest);
    CHECK(reports[i].witness_json == again[i].witness_json);
  }

  CHECK_THROWS_AS(run_suite("no-such-check", options), Error);

  options.count = 1;
  std::vector<CheckReport> everything = run_suite("all", options);
  CHECK(everything.size() == suite_names().size());
}
