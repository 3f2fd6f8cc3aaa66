#include "dgh/path_homology.hpp"

#include <algorithm>
#include <cmath>

#include "dgh/homotopy.hpp"

namespace dgh {

AllowedPathIndex enumerate_allowed_paths(const Digraph& g, std::size_t p_max, std::size_t cap) {
  AllowedPathIndex index;
  index.paths.resize(p_max + 1);
  index.lookup.resize(p_max + 1);
  std::size_t total = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) index.paths[0].push_back({v});
  total += index.paths[0].size();
  for (std::size_t p = 1; p <= p_max; ++p) {
    for (const auto& path : index.paths[p - 1]) {
      for (VertexId next : g.out_neighbors(path.back())) {
        std::vector<VertexId> extended = path;
        extended.push_back(next);
        index.paths[p].push_back(std::move(extended));
        if (++total > cap)
          fail(Errc::path_explosion,
               "allowed path count exceeds the cap of " + std::to_string(cap));
      }
    }
    // extension of a sorted list by sorted neighbor lists stays sorted
  }
  for (std::size_t p = 0; p <= p_max; ++p)
    for (std::size_t i = 0; i < index.paths[p].size(); ++i)
      index.lookup[p].emplace(index.paths[p][i], i);
  return index;
}

BoundaryBlocks boundary_on_allowed(const AllowedPathIndex& index, std::size_t p) {
  if (p == 0 || p > index.max_degree()) fail(Errc::internal, "boundary degree out of range");
  const auto& paths = index.paths[p];
  const auto& below = index.lookup[p - 1];

  std::map<std::vector<VertexId>, std::size_t> non_allowed_index;
  std::vector<std::vector<VertexId>> non_allowed_rows;
  std::vector<std::vector<std::pair<std::size_t, int>>> allowed_entries(paths.size());
  std::vector<std::vector<std::pair<std::size_t, int>>> non_allowed_entries(paths.size());

  for (std::size_t col = 0; col < paths.size(); ++col) {
    const auto& path = paths[col];
    for (std::size_t k = 0; k <= p; ++k) {
      // drop vertex k; a term with equal consecutive vertices dies in the
      // regular quotient
      if (k > 0 && k < p && path[k - 1] == path[k + 1]) continue;
      std::vector<VertexId> face;
      face.reserve(p);
      for (std::size_t i = 0; i <= p; ++i)
        if (i != k) face.push_back(path[i]);
      int sign = (k % 2 == 0) ? 1 : -1;
      auto hit = below.find(face);
      if (hit != below.end()) {
        allowed_entries[col].emplace_back(hit->second, sign);
      } else {
        auto [it, inserted] = non_allowed_index.emplace(face, non_allowed_rows.size());
        if (inserted) non_allowed_rows.push_back(face);
        non_allowed_entries[col].emplace_back(it->second, sign);
      }
    }
  }

  BoundaryBlocks out;
  out.allowed = IntMatrix(index.count(p - 1), paths.size());
  out.non_allowed = IntMatrix(non_allowed_rows.size(), paths.size());
  for (std::size_t col = 0; col < paths.size(); ++col) {
    for (auto [row, sign] : allowed_entries[col]) out.allowed.at(row, col) += sign;
    for (auto [row, sign] : non_allowed_entries[col]) out.non_allowed.at(row, col) += sign;
  }
  out.non_allowed_rows = std::move(non_allowed_rows);
  return out;
}

OmegaComplex omega_complex(const Digraph& g, std::size_t top_degree, std::size_t cap) {
  OmegaComplex cx;
  cx.index = enumerate_allowed_paths(g, top_degree, cap);
  cx.omega_basis.resize(top_degree + 1);
  cx.boundary.resize(top_degree + 1);

  cx.omega_basis[0] = IntMatrix::identity(cx.index.count(0));
  std::vector<BoundaryBlocks> blocks(top_degree + 1);
  for (std::size_t p = 1; p <= top_degree; ++p) {
    blocks[p] = boundary_on_allowed(cx.index, p);
    cx.omega_basis[p] = integer_kernel(blocks[p].non_allowed);
  }
  for (std::size_t p = 1; p <= top_degree; ++p) {
    IntMatrix target = blocks[p].allowed * cx.omega_basis[p];
    auto coords = solve_columns(cx.omega_basis[p - 1], target);
    if (!coords)
      fail(Errc::internal, "boundary of an Omega basis failed to land in Omega");
    cx.boundary[p] = std::move(*coords);
  }
  for (std::size_t p = 2; p <= top_degree; ++p)
    if (!(cx.boundary[p - 1] * cx.boundary[p]).is_zero())
      fail(Errc::internal, "boundary squared is nonzero");
  return cx;
}

static HomologyResult compute(const Digraph& g, std::size_t p_max, std::size_t cap, bool dual) {
  HomologyResult res;
  res.p_max = p_max;
  res.dual = dual;
  res.complex = omega_complex(g, p_max + 1, cap);
  for (std::size_t p = 0; p <= p_max; ++p) {
    std::size_t rank_p = res.complex.rank(p);
    if (dual) {
      // d^p = (D_{p+1})^T on the dual of Omega_p
      IntMatrix d_out = res.complex.boundary[p + 1].transpose();
      IntMatrix d_in = p == 0 ? IntMatrix(rank_p, 0) : res.complex.boundary[p].transpose();
      res.groups.push_back(FgAbGroup::subquotient(integer_kernel(d_out), d_in));
    } else {
      IntMatrix d_out = p == 0 ? IntMatrix(0, rank_p) : res.complex.boundary[p];
      IntMatrix d_in = res.complex.boundary[p + 1];
      res.groups.push_back(FgAbGroup::subquotient(integer_kernel(d_out), d_in));
    }
  }
  return res;
}

HomologyResult cohomology(const Digraph& g, std::size_t p_max, std::size_t cap) {
  return compute(g, p_max, cap, true);
}

HomologyResult homology(const Digraph& g, std::size_t p_max, std::size_t cap) {
  return compute(g, p_max, cap, false);
}

std::vector<IntMatrix> chain_map(const DigraphMap& f, const OmegaComplex& domain_complex,
                                 const OmegaComplex& codomain_complex) {
  std::size_t top = std::min(domain_complex.omega_basis.size(),
                             codomain_complex.omega_basis.size()) -
                    1;
  std::vector<IntMatrix> out(top + 1);
  for (std::size_t p = 0; p <= top; ++p) {
    // pushforward on allowed paths; degenerate images vanish
    const auto& dom_paths = domain_complex.index.paths[p];
    IntMatrix push(codomain_complex.index.count(p), dom_paths.size());
    for (std::size_t col = 0; col < dom_paths.size(); ++col) {
      std::vector<VertexId> image;
      image.reserve(p + 1);
      bool degenerate = false;
      for (VertexId v : dom_paths[col]) {
        VertexId w = f(v);
        if (!image.empty() && image.back() == w) {
          degenerate = true;
          break;
        }
        image.push_back(w);
      }
      if (degenerate) continue;
      auto hit = codomain_complex.index.lookup[p].find(image);
      if (hit == codomain_complex.index.lookup[p].end())
        fail(Errc::chain_map_violation, "pushforward left the allowed paths");
      push.at(hit->second, col) = 1;
    }
    auto coords = solve_columns(codomain_complex.omega_basis[p],
                                push * domain_complex.omega_basis[p]);
    if (!coords)
      fail(Errc::chain_map_violation, "pushforward of an Omega basis left Omega");
    out[p] = std::move(*coords);
  }
  for (std::size_t p = 1; p <= top; ++p)
    if (!(codomain_complex.boundary[p] * out[p] == out[p - 1] * domain_complex.boundary[p]))
      fail(Errc::chain_map_violation, "pushforward does not commute with the boundary");
  return out;
}

std::vector<GroupHom> induced_cochain_maps(const DigraphMap& f, const HomologyResult& codomain,
                                           const HomologyResult& domain) {
  if (!codomain.dual || !domain.dual)
    fail(Errc::internal, "induced_cochain_maps needs cohomology results");
  std::size_t p_max = std::min(codomain.p_max, domain.p_max);
  std::vector<IntMatrix> chains = chain_map(f, domain.complex, codomain.complex);
  std::vector<GroupHom> out;
  for (std::size_t p = 0; p <= p_max; ++p)
    out.push_back(GroupHom::from_lift(chains[p].transpose(), codomain.groups[p],
                                      domain.groups[p]));
  return out;
}

std::size_t betti_number_rational(const Digraph& g, std::size_t p, std::size_t cap) {
  OmegaComplex cx = omega_complex(g, p + 1, cap);
  std::size_t rank_p = cx.rank(p);
  std::size_t rank_out = p == 0 ? 0 : fraction_free_rank(cx.boundary[p]);
  std::size_t rank_in = fraction_free_rank(cx.boundary[p + 1]);
  return rank_p - rank_out - rank_in;
}

bool h0_component_check(const Digraph& g, const std::vector<std::size_t>& m_values) {
  std::size_t components = g.weak_components().size();
  HomologyResult res = cohomology(g, 0);
  if (res.groups[0].rank() != components || !res.groups[0].torsion().empty()) return false;

  for (std::size_t m : m_values) {
    if (m == 0) continue;
    double expected = std::pow(static_cast<double>(m), static_cast<double>(components));
    if (expected > 100000.0) continue;  // keep the enumeration small
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i) labels.push_back("z" + std::to_string(i));
    Digraph edgeless(labels, {});
    auto maps = enumerate_maps(g, edgeless);
    if (!maps) return false;
    auto classes = homotopy_classes(*maps);
    if (!classes) return false;
    if (classes->size() != static_cast<std::size_t>(expected)) return false;
  }
  return true;
}

}  // namespace dgh
