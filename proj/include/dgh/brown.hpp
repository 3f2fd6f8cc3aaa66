#pragma once

// Mechanical verification of the Brown-functor properties of first path
// cohomology on concrete instances: the three axioms, exactness of the
// modified-mapping-cone sequence, the four-term sequence, the mapping-tube
// surjectivity, and the two cochain-level lemmas behind Mayer-Vietoris.
//
// Every randomized check derives its instance from a recorded seed, so any
// failure replays bit-exactly.  Degree 1 is the normative setting; degree 2
// runs the same pipeline experimentally and must not gate anything.

#include <cstdint>
#include <string>
#include <vector>

#include "dgh/digraph.hpp"
#include "dgh/homotopy.hpp"

namespace dgh {

// splitmix64; self-contained so streams are stable across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  std::uint32_t below(std::uint32_t n);
  bool percent(std::uint32_t p);

 private:
  std::uint64_t state_;
};

struct MvInstance {
  Digraph g, g1, g2;
};

// Requires union_of(g1, g2) == g; the four inclusions then validate.
MvInstance make_mv_instance(Digraph g, Digraph g1, Digraph g2);

struct CheckReport {
  std::string check;
  std::string digest;       // of the instance document
  bool pass = false;
  std::string detail;
  std::string witness_json;  // instance plus outcome data, compact JSON
  std::uint64_t seed = 0;    // 0 for deterministic instances
};

CheckReport check_triviality();
CheckReport check_additivity(const Digraph& g, const Digraph& h, std::size_t degree = 1);
CheckReport check_mv_surjectivity(const MvInstance& inst, std::size_t degree = 1);
CheckReport check_cochain_lemmas(const MvInstance& inst);
CheckReport check_cone_exactness(const DigraphMap& f, std::size_t degree = 1);
CheckReport check_four_term(const Digraph& g, const Digraph& h, std::size_t degree = 1);
CheckReport check_tube_surjectivity(const DigraphMap& f, const DigraphMap& g,
                                    std::size_t degree = 1);

// --- seeded instance generators ---------------------------------------------

Digraph random_digraph(Rng& rng, std::size_t min_vertices, std::size_t max_vertices);
DigraphMap random_map(Rng& rng, const Digraph& domain, const Digraph& codomain);
MvInstance random_decomposition(Rng& rng, const Digraph& g);

// Random one-step walk from `start`; the result always verifies, so its two
// endpoint frames are a certified homotopic pair.
Homotopy random_walk_homotopy(Rng& rng, const DigraphMap& start, std::size_t steps);

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t count = 10;
  std::size_t min_size = 3;
  std::size_t max_size = 6;
  std::size_t degree = 1;
};

// which: one of suite_names() or "all".
std::vector<CheckReport> run_suite(const std::string& which, const SuiteOptions& options);
const std::vector<std::string>& suite_names();

std::uint64_t instance_seed(std::uint64_t suite_seed, std::size_t index);

}  // namespace dgh
