#pragma once

// Path chain complex Omega_*(G), its homology, the dual cochain complex and
// integer path cohomology H^p(G), plus induced maps of digraph maps.
//
// An allowed p-path is a vertex sequence following edges; Omega_p collects
// the allowed chains whose boundary stays allowed (degenerate terms with a
// repeated consecutive vertex are dropped, which is the regular-path
// quotient).  Bases are Hermite-reduced kernels in lexicographic path order,
// so every matrix here is reproducible byte for byte.

#include <cstddef>
#include <map>
#include <vector>

#include "dgh/abelian.hpp"
#include "dgh/digraph.hpp"

namespace dgh {

inline constexpr std::size_t kDefaultPathCap = 200'000;

struct AllowedPathIndex {
  // paths[p] lists the allowed p-paths in lexicographic order.
  std::vector<std::vector<std::vector<VertexId>>> paths;
  std::vector<std::map<std::vector<VertexId>, std::size_t>> lookup;

  std::size_t max_degree() const { return paths.empty() ? 0 : paths.size() - 1; }
  std::size_t count(std::size_t p) const { return p < paths.size() ? paths[p].size() : 0; }
};

// Complete lists per degree <= p_max; errors with path_explosion beyond cap.
AllowedPathIndex enumerate_allowed_paths(const Digraph& g, std::size_t p_max,
                                         std::size_t cap = kDefaultPathCap);

struct BoundaryBlocks {
  // Boundary of allowed p-paths split by target: rows of `allowed` are the
  // allowed (p-1)-paths; rows of `non_allowed` are the non-allowed regular
  // (p-1)-sequences that occur (in first-seen order).
  IntMatrix allowed;
  IntMatrix non_allowed;
  std::vector<std::vector<VertexId>> non_allowed_rows;
};

BoundaryBlocks boundary_on_allowed(const AllowedPathIndex& index, std::size_t p);

struct OmegaComplex {
  AllowedPathIndex index;
  std::vector<IntMatrix> omega_basis;  // per degree: allowed-coords x rank
  std::vector<IntMatrix> boundary;     // boundary[p] : Omega_p -> Omega_{p-1}; [0] unused

  std::size_t rank(std::size_t p) const {
    return p < omega_basis.size() ? omega_basis[p].cols() : 0;
  }
};

// Omega and boundary matrices for degrees <= top_degree.
OmegaComplex omega_complex(const Digraph& g, std::size_t top_degree,
                           std::size_t cap = kDefaultPathCap);

struct HomologyResult {
  std::size_t p_max = 0;
  bool dual = false;  // true: cohomology of the dual complex
  OmegaComplex complex;
  std::vector<FgAbGroup> groups;  // degrees 0..p_max
};

HomologyResult cohomology(const Digraph& g, std::size_t p_max,
                          std::size_t cap = kDefaultPathCap);
HomologyResult homology(const Digraph& g, std::size_t p_max, std::size_t cap = kDefaultPathCap);

// Chain-level pushforward of f in the Omega bases, degrees 0..top shared by
// both complexes; throws chain_map_violation if the image chain fails to
// land in Omega or the matrices do not commute with the boundaries.
std::vector<IntMatrix> chain_map(const DigraphMap& f, const OmegaComplex& domain_complex,
                                 const OmegaComplex& codomain_complex);

// f^* : H^p(codomain) -> H^p(domain) for p = 0..p_max.
std::vector<GroupHom> induced_cochain_maps(const DigraphMap& f, const HomologyResult& codomain,
                                           const HomologyResult& domain);

// Betti number by fraction-free rational ranks only; independent of the
// Smith/Hermite pipeline, used as a cross-check oracle.
std::size_t betti_number_rational(const Digraph& g, std::size_t p,
                                  std::size_t cap = kDefaultPathCap);

// rank H^0 equals the number of weak components, and for each m the maps
// into the edgeless digraph on m vertices fall into exactly m^components
// homotopy classes.
bool h0_component_check(const Digraph& g, const std::vector<std::size_t>& m_values = {2, 3});

}  // namespace dgh
