#pragma once

// The named digraph constructions: cone, mapping cylinder, modified mapping
// cylinder, modified cone, modified mapping cone, mapping tube, and the
// S-digraph with its retraction.  Each returns the digraph together with its
// canonical maps under fixed names.
//
// Label schemes (documented, byte-stable):
//   cone/modified cone      base "(g,0)", apex "*", extra vertices keep their
//                           codomain labels
//   mapping cylinder(s)     codomain vertices keep their labels, the domain
//                           slice is "(g,1)"
//   modified mapping cone   codomain labels, middle slice "(g,1)", apex "*"
//   mapping tube            codomain labels, slices "(x,1)" and "(x,2)"
//   S-digraph               inherited from the modified mapping cone of
//                           G ⊔ H -> G ∪ H (so slices look like "(L:x,1)")
//
// The section vertex g_h used by the modified cone defaults to the least
// preimage in label order; an override table can force other choices.
// The apex is labeled "*"; when that label is already taken (iterated
// cones), the first free label among "**", "***", ... is used instead.

#include <map>
#include <string>

#include "dgh/digraph.hpp"
#include "dgh/homotopy.hpp"

namespace dgh {

struct ConstructionResult {
  Digraph result;
  std::map<std::string, DigraphMap> maps;      // fixed names per construction
  std::map<std::string, std::string> choices;  // g_h table where applicable
  std::string apex;                            // cone point label, when one exists
};

using SectionChoices = std::map<std::string, std::string>;

// (G box I^-  ⊔  *) / ((g,1) ~ *).  Maps: "embed_base", "apex".
ConstructionResult cone(const Digraph& g);

// (G box I^-  ⊔  H) / ((g,0) ~ f(g)).  Maps: "embed_H", "embed_G".
ConstructionResult mapping_cylinder(const DigraphMap& f);

// Mapping cylinder plus the bridge edges through multi-preimage image
// vertices.  Maps: "embed_H", "embed_G", "crush" (projection onto H).
ConstructionResult modified_mapping_cylinder(const DigraphMap& f);

// Cone over the domain augmented with the designated image vertices, the
// apex edges through them, and one section edge per designated vertex.
// Maps: "embed_base", "apex"; choices: the g_h table.
ConstructionResult modified_cone(const DigraphMap& f, const SectionChoices& overrides = {});

// Gluing of the modified cone and the modified mapping cylinder along the
// domain slice.  Maps: "embed_H", "embed_G", "apex", "embed_cone_part",
// "embed_cyl_part"; choices: the g_h table.
ConstructionResult modified_mapping_cone(const DigraphMap& f,
                                         const SectionChoices& overrides = {});

// ((G box I3) ⊔ H) / ((x,0) ~ f(x), (x,3) ~ g(x)) with I3 = 0<-1->2->3.
// Maps: "embed_H", "embed_G_level1", "embed_G_level2".
ConstructionResult mapping_tube(const DigraphMap& f, const DigraphMap& g);

struct TubeDecomposition {
  Digraph tube;
  Digraph cylinder_part;  // mapping cylinder of f ⊔ g, in tube labels
  Digraph product_part;   // G box I+, in tube labels
  Digraph intersection;   // two disjoint copies of G
};
TubeDecomposition tube_decomposition(const DigraphMap& f, const DigraphMap& g);

// The part of the modified mapping cone of G ⊔ H -> G ∪ H lying over the
// intersection, with its inclusion and retraction.  Maps: "include"
// (S -> C(f)), "retract" (C(f) -> S); retract∘include = id.
ConstructionResult s_digraph(const Digraph& g, const Digraph& h);

// --- closed-form homotopies carried by the constructions -------------------

// G box I2 -> C(f) sliding the image of f up through the middle slice to the
// apex; endpoints are embed_H∘f and the constant map at the apex.
Homotopy cone_slide_homotopy(const DigraphMap& f, const ConstructionResult& cofiber);

// One-step crush of the modified mapping cylinder onto its codomain copy;
// endpoints are the identity and embed_H∘crush.
Homotopy crush_homotopy(const ConstructionResult& cylinder);

// Two-step contraction of the modified cone onto the apex, passing through
// the section vertices.
Homotopy modified_cone_contraction(const ConstructionResult& mcone);

// The tube homotopy between embed_H∘f and embed_H∘g running through the two
// interior slices.
Homotopy tube_ends_homotopy(const DigraphMap& f, const DigraphMap& g,
                            const ConstructionResult& tube);

// Two-step homotopy between the identity of the modified mapping cone and
// include∘retract of its S-digraph.
Homotopy s_retract_homotopy(const Digraph& g, const Digraph& h, const ConstructionResult& s);

}  // namespace dgh
