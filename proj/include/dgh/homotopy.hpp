#pragma once

// Exact decision procedures for digraph homotopy.
//
// A homotopy between digraph maps f,g : G -> H is a digraph map
// F : G box I_n -> H restricting to f at level 0 and to g at level n; it is
// stored as the orientation word of I_n plus the frame sequence
// f_0,...,f_n.  The map space Maps(G,H) is finite, so homotopy is decided
// exactly by breadth-first search over the one-step relation, with a state
// budget separating a sound "no" (component exhausted) from "unknown".

#include <cstdint>
#include <optional>
#include <vector>

#include "dgh/digraph.hpp"

namespace dgh {

struct Homotopy {
  Digraph domain, codomain;
  LineDigraph line;                // word of length n
  std::vector<DigraphMap> frames;  // n+1 frames, each domain -> codomain
};

enum class HomotopyStatus { homotopic, not_homotopic, budget_exceeded };

struct HomotopyVerdict {
  HomotopyStatus status = HomotopyStatus::budget_exceeded;
  std::uint64_t explored = 0;              // states visited
  std::optional<Homotopy> certificate;     // present iff homotopic
};

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

// Single step between frames sharing domain and codomain: with '+' every
// vertex satisfies f(x)=g(x) or f(x)->g(x); with '-' the reversed condition.
bool one_step(const DigraphMap& f, const DigraphMap& g, char orientation);

// True iff all frames are valid maps with the stated endpoints' shape and
// every step satisfies the one_step condition; equivalently, the assembled
// F on box_product(domain, line) validates as a digraph map.
bool verify_homotopy(const Homotopy& h);

// Assembles F : box_product(domain, line) -> codomain from the frames.
// Throws if the frame data cannot form a digraph map.
DigraphMap assemble_box_map(const Homotopy& h);

// BFS over Maps(G,H) from f under the symmetric one-step relation.
// "not_homotopic" is only reported when f's whole component was exhausted
// within budget; certificates always re-verify.  BFS finds a shortest
// step sequence, though no contract promises minimality.  On finite
// domains weak homotopy agrees with homotopy, so this decides both.
HomotopyVerdict decide_homotopic(const DigraphMap& f, const DigraphMap& g,
                                 std::uint64_t budget = kDefaultBudget);

// Homotopy between the identity and some constant map; rejects the empty
// digraph.
HomotopyVerdict is_contractible(const Digraph& g, std::uint64_t budget = kDefaultBudget);

// All valid digraph maps G -> H, in lexicographic order of assignment
// vectors; empty optional when the count exceeds the budget.
std::optional<std::vector<DigraphMap>> enumerate_maps(const Digraph& g, const Digraph& h,
                                                      std::uint64_t budget = kDefaultBudget);

// Partition of maps into homotopy classes (connected components of the
// one-step relation); classes ordered by their minimal member.
std::optional<std::vector<std::vector<std::size_t>>> homotopy_classes(
    const std::vector<DigraphMap>& maps, std::uint64_t budget = kDefaultBudget);

enum class EquivalenceStatus { equivalent, not_equivalent, budget_exceeded };

struct EquivalenceVerdict {
  EquivalenceStatus status = EquivalenceStatus::budget_exceeded;
  std::uint64_t explored = 0;
  std::optional<DigraphMap> forward;    // G -> H
  std::optional<DigraphMap> backward;   // H -> G
  std::optional<Homotopy> backward_forward;  // backward∘forward ~ id_G
  std::optional<Homotopy> forward_backward;  // forward∘backward ~ id_H
};

// Searches for a homotopy-equivalence pair.  The search space is doubly
// exponential in the vertex counts; intended for small digraphs only.
EquivalenceVerdict homotopy_equivalent(const Digraph& g, const Digraph& h,
                                       std::uint64_t budget = kDefaultBudget);

// Checks a claimed equivalence pair with explicit certificates.
bool verify_equivalence(const DigraphMap& forward, const DigraphMap& backward,
                        const Homotopy& backward_forward, const Homotopy& forward_backward);

struct HepResult {
  std::optional<Homotopy> extension;
  std::uint64_t candidates_tried = 0;  // vertex-image choices tested
};

// Homotopy extension search: given f : G -> H and a homotopy F on a
// subdigraph X with F(-,0) = f|X, exhaustively searches frame extensions
// to G with the same orientation word.  Returns the first extension found.
HepResult hep_extension_search(const Digraph& g, const Digraph& x, const DigraphMap& f,
                               const Homotopy& partial);

}  // namespace dgh
