#include "dgh/homotopy.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>

namespace dgh {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<VertexId>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ (x + 0x9e3779b9)) * 1099511628211ull;
    return h;
  }
};

// For vertex v, the earlier-indexed endpoints of its domain edges; lets the
// enumerators check map validity incrementally while assigning images in
// vertex order.
struct PrevAdjacency {
  std::vector<std::vector<VertexId>> out_to_prev;  // (v,u) in E with u < v
  std::vector<std::vector<VertexId>> in_from_prev;  // (u,v) in E with u < v
};

PrevAdjacency prev_adjacency(const Digraph& g) {
  PrevAdjacency adj;
  adj.out_to_prev.resize(g.vertex_count());
  adj.in_from_prev.resize(g.vertex_count());
  for (auto [from, to] : g.edges()) {
    if (to < from) adj.out_to_prev[from].push_back(to);
    if (from < to) adj.in_from_prev[to].push_back(from);
  }
  return adj;
}

bool partial_ok(const Digraph& cod, const PrevAdjacency& adj,
                const std::vector<VertexId>& cur, VertexId v, VertexId image) {
  for (auto u : adj.out_to_prev[v])
    if (image != cur[u] && !cod.has_edge(image, cur[u])) return false;
  for (auto u : adj.in_from_prev[v])
    if (cur[u] != image && !cod.has_edge(cur[u], image)) return false;
  return true;
}

// Emits every valid map one step away from `from` under the given
// orientation (the map itself is skipped).
template <typename Fn>
void for_each_one_step(const Digraph& dom, const Digraph& cod, const PrevAdjacency& adj,
                       const std::vector<VertexId>& from, char orient, Fn&& emit) {
  const std::size_t n = dom.vertex_count();
  std::vector<VertexId> cur(n);
  std::function<void(std::size_t, bool)> rec = [&](std::size_t v, bool moved) {
    if (v == n) {
      if (moved) emit(cur);
      return;
    }
    auto try_image = [&](VertexId w) {
      if (!partial_ok(cod, adj, cur, static_cast<VertexId>(v), w)) return;
      cur[v] = w;
      rec(v + 1, moved || w != from[v]);
    };
    try_image(from[v]);
    const auto& candidates =
        orient == '+' ? cod.out_neighbors(from[v]) : cod.in_neighbors(from[v]);
    for (auto w : candidates) try_image(w);
  };
  if (n == 0) return;  // the empty map has no distinct neighbors
  rec(0, false);
}

struct BfsOutcome {
  bool found = false;
  bool exhausted = false;
  std::uint64_t visited = 0;
  int found_index = -1;
  std::vector<std::vector<VertexId>> states;
  std::vector<int> parent;
  std::vector<char> move;
  std::unordered_map<std::vector<VertexId>, int, VecHash> index;
};

BfsOutcome bfs_maps(const Digraph& dom, const Digraph& cod, const std::vector<VertexId>& start,
                    const std::function<bool(const std::vector<VertexId>&)>& goal,
                    std::uint64_t budget) {
  PrevAdjacency adj = prev_adjacency(dom);
  BfsOutcome out;
  out.states.push_back(start);
  out.parent.push_back(-1);
  out.move.push_back(' ');
  out.index.emplace(start, 0);
  out.visited = 1;
  if (goal && goal(start)) {
    out.found = true;
    out.found_index = 0;
    return out;
  }
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int at = queue.front();
    queue.pop_front();
    std::vector<VertexId> state = out.states[at];  // copy: arena may reallocate
    bool over_budget = false;
    for (char orient : {'+', '-'}) {
      for_each_one_step(dom, cod, adj, state, orient, [&](const std::vector<VertexId>& next) {
        if (out.found || over_budget) return;
        auto [it, inserted] = out.index.emplace(next, static_cast<int>(out.states.size()));
        if (!inserted) return;
        if (out.visited >= budget) {
          out.index.erase(it);
          over_budget = true;
          return;
        }
        out.states.push_back(next);
        out.parent.push_back(at);
        out.move.push_back(orient);
        ++out.visited;
        if (goal && goal(next)) {
          out.found = true;
          out.found_index = static_cast<int>(out.states.size()) - 1;
          return;
        }
        queue.push_back(static_cast<int>(out.states.size()) - 1);
      });
      if (out.found) return out;
      if (over_budget) return out;
    }
  }
  out.exhausted = true;
  return out;
}

Homotopy path_to_homotopy(const Digraph& dom, const Digraph& cod, const BfsOutcome& out,
                          int target) {
  std::vector<int> chain;
  for (int at = target; at >= 0; at = out.parent[at]) chain.push_back(at);
  std::reverse(chain.begin(), chain.end());
  Homotopy h;
  h.domain = dom;
  h.codomain = cod;
  std::string word;
  for (std::size_t i = 1; i < chain.size(); ++i) word += out.move[chain[i]];
  h.line = LineDigraph(word);
  for (int at : chain) h.frames.emplace_back(dom, cod, out.states[at]);
  return h;
}

Homotopy reverse_homotopy(const Homotopy& h) {
  Homotopy out;
  out.domain = h.domain;
  out.codomain = h.codomain;
  std::string word(h.line.word().rbegin(), h.line.word().rend());
  for (auto& c : word) c = (c == '+') ? '-' : '+';
  out.line = LineDigraph(word);
  out.frames.assign(h.frames.rbegin(), h.frames.rend());
  return out;
}

void require_parallel(const DigraphMap& f, const DigraphMap& g) {
  if (f.domain() != g.domain() || f.codomain() != g.codomain())
    fail(Errc::domain_mismatch, "maps do not share domain and codomain");
}

}  // namespace

bool one_step(const DigraphMap& f, const DigraphMap& g, char orientation) {
  require_parallel(f, g);
  const Digraph& cod = f.codomain();
  for (VertexId v = 0; v < f.domain().vertex_count(); ++v) {
    VertexId a = f(v), b = g(v);
    if (a == b) continue;
    if (orientation == '+' ? !cod.has_edge(a, b) : !cod.has_edge(b, a)) return false;
  }
  return true;
}

bool verify_homotopy(const Homotopy& h) {
  if (h.frames.size() != h.line.steps() + 1) return false;
  for (const auto& frame : h.frames)
    if (frame.domain() != h.domain || frame.codomain() != h.codomain) return false;
  for (std::size_t i = 0; i < h.line.steps(); ++i)
    if (!one_step(h.frames[i], h.frames[i + 1], h.line.orientation(i))) return false;
  return true;
}

DigraphMap assemble_box_map(const Homotopy& h) {
  if (h.frames.size() != h.line.steps() + 1)
    fail(Errc::domain_mismatch, "homotopy needs word length + 1 frames");
  Digraph box = box_product(h.domain, h.line.to_digraph());
  std::vector<VertexId> images(box.vertex_count());
  for (std::size_t i = 0; i <= h.line.steps(); ++i) {
    for (VertexId v = 0; v < h.domain.vertex_count(); ++v) {
      std::string label = "(" + h.domain.label(v) + "," + h.line.vertex_label(i) + ")";
      images[box.index_of(label)] = h.frames[i](v);
    }
  }
  return DigraphMap(box, h.codomain, std::move(images));
}

HomotopyVerdict decide_homotopic(const DigraphMap& f, const DigraphMap& g,
                                 std::uint64_t budget) {
  require_parallel(f, g);
  const std::vector<VertexId>& target = g.images();
  BfsOutcome out = bfs_maps(f.domain(), f.codomain(), f.images(),
                            [&](const std::vector<VertexId>& s) { return s == target; }, budget);
  HomotopyVerdict verdict;
  verdict.explored = out.visited;
  if (out.found) {
    verdict.status = HomotopyStatus::homotopic;
    verdict.certificate = path_to_homotopy(f.domain(), f.codomain(), out, out.found_index);
  } else if (out.exhausted) {
    verdict.status = HomotopyStatus::not_homotopic;
  } else {
    verdict.status = HomotopyStatus::budget_exceeded;
  }
  return verdict;
}

HomotopyVerdict is_contractible(const Digraph& g, std::uint64_t budget) {
  if (g.empty()) fail(Errc::empty_digraph, "contractibility needs a nonempty digraph");
  auto constant = [](const std::vector<VertexId>& s) {
    return std::all_of(s.begin(), s.end(), [&](VertexId v) { return v == s[0]; });
  };
  DigraphMap id = DigraphMap::identity(g);
  BfsOutcome out = bfs_maps(g, g, id.images(), constant, budget);
  HomotopyVerdict verdict;
  verdict.explored = out.visited;
  if (out.found) {
    verdict.status = HomotopyStatus::homotopic;
    verdict.certificate = path_to_homotopy(g, g, out, out.found_index);
  } else if (out.exhausted) {
    verdict.status = HomotopyStatus::not_homotopic;
  } else {
    verdict.status = HomotopyStatus::budget_exceeded;
  }
  return verdict;
}

namespace {

// All valid assignment vectors, without materializing map objects.
std::optional<std::vector<std::vector<VertexId>>> enumerate_assignments(const Digraph& g,
                                                                        const Digraph& h,
                                                                        std::uint64_t budget) {
  std::vector<std::vector<VertexId>> out;
  if (g.empty()) {
    out.push_back({});
    return out;
  }
  if (h.empty()) return out;
  PrevAdjacency adj = prev_adjacency(g);
  std::vector<VertexId> cur(g.vertex_count());
  bool overflow = false;
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (overflow) return;
    if (v == g.vertex_count()) {
      if (out.size() >= budget) {
        overflow = true;
        return;
      }
      out.push_back(cur);
      return;
    }
    for (VertexId w = 0; w < h.vertex_count(); ++w) {
      if (!partial_ok(h, adj, cur, static_cast<VertexId>(v), w)) continue;
      cur[v] = w;
      rec(v + 1);
    }
  };
  rec(0);
  if (overflow) return std::nullopt;
  return out;
}

// One-step components over a complete assignment list; returns one
// representative index per class.
std::optional<std::vector<std::size_t>> assignment_class_reps(
    const Digraph& dom, const Digraph& cod, const std::vector<std::vector<VertexId>>& all,
    std::uint64_t budget) {
  PrevAdjacency adj = prev_adjacency(dom);
  std::unordered_map<std::vector<VertexId>, std::size_t, VecHash> index;
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], i);
  std::vector<bool> seen(all.size(), false);
  std::vector<std::size_t> reps;
  std::uint64_t expansions = 0;
  for (std::size_t start = 0; start < all.size(); ++start) {
    if (seen[start]) continue;
    reps.push_back(start);
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      std::size_t at = queue.front();
      queue.pop_front();
      if (++expansions > budget) return std::nullopt;
      for (char orient : {'+', '-'}) {
        for_each_one_step(dom, cod, adj, all[at], orient,
                          [&](const std::vector<VertexId>& next) {
                            auto it = index.find(next);
                            if (it == index.end() || seen[it->second]) return;
                            seen[it->second] = true;
                            queue.push_back(it->second);
                          });
      }
    }
  }
  return reps;
}

}  // namespace

std::optional<std::vector<DigraphMap>> enumerate_maps(const Digraph& g, const Digraph& h,
                                                      std::uint64_t budget) {
  auto assignments = enumerate_assignments(g, h, budget);
  if (!assignments) return std::nullopt;
  std::vector<DigraphMap> maps;
  maps.reserve(assignments->size());
  for (auto& images : *assignments) maps.emplace_back(g, h, std::move(images));
  return maps;
}

std::optional<std::vector<std::vector<std::size_t>>> homotopy_classes(
    const std::vector<DigraphMap>& maps, std::uint64_t budget) {
  if (maps.empty()) return std::vector<std::vector<std::size_t>>{};
  const Digraph& dom = maps[0].domain();
  const Digraph& cod = maps[0].codomain();
  PrevAdjacency adj = prev_adjacency(dom);
  std::unordered_map<std::vector<VertexId>, std::size_t, VecHash> index;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i].domain() != dom || maps[i].codomain() != cod)
      fail(Errc::domain_mismatch, "homotopy_classes: maps are not parallel");
    index.emplace(maps[i].images(), i);
  }
  std::vector<int> cls(maps.size(), -1);
  std::vector<std::vector<std::size_t>> classes;
  std::uint64_t expansions = 0;
  for (std::size_t start = 0; start < maps.size(); ++start) {
    if (cls[start] >= 0) continue;
    int c = static_cast<int>(classes.size());
    classes.push_back({});
    std::deque<std::size_t> queue{start};
    cls[start] = c;
    while (!queue.empty()) {
      std::size_t at = queue.front();
      queue.pop_front();
      classes[c].push_back(at);
      if (++expansions > budget) return std::nullopt;
      for (char orient : {'+', '-'}) {
        for_each_one_step(dom, cod, adj, maps[at].images(), orient,
                          [&](const std::vector<VertexId>& next) {
                            auto it = index.find(next);
                            if (it == index.end() || cls[it->second] >= 0) return;
                            cls[it->second] = c;
                            queue.push_back(it->second);
                          });
      }
    }
    std::sort(classes[c].begin(), classes[c].end());
  }
  return classes;
}

EquivalenceVerdict homotopy_equivalent(const Digraph& g, const Digraph& h,
                                       std::uint64_t budget) {
  EquivalenceVerdict verdict;
  auto forward = enumerate_assignments(g, h, budget);
  auto backward = enumerate_assignments(h, g, budget);
  if (!forward || !backward) return verdict;  // budget_exceeded

  // Components of the identities; membership decides backward∘forward ~ id
  // exactly.  Composition respects homotopy classes, so one representative
  // per class suffices on each side.
  BfsOutcome comp_g = bfs_maps(g, g, DigraphMap::identity(g).images(), nullptr, budget);
  BfsOutcome comp_h = bfs_maps(h, h, DigraphMap::identity(h).images(), nullptr, budget);
  verdict.explored = comp_g.visited + comp_h.visited;
  if (!comp_g.exhausted || !comp_h.exhausted) return verdict;

  auto forward_reps = assignment_class_reps(g, h, *forward, budget);
  auto backward_reps = assignment_class_reps(h, g, *backward, budget);
  if (!forward_reps || !backward_reps) return verdict;

  for (std::size_t fi : *forward_reps) {
    const std::vector<VertexId>& fwd = (*forward)[fi];
    for (std::size_t bi : *backward_reps) {
      const std::vector<VertexId>& bwd = (*backward)[bi];
      std::vector<VertexId> round_g(g.vertex_count()), round_h(h.vertex_count());
      for (VertexId v = 0; v < g.vertex_count(); ++v) round_g[v] = bwd[fwd[v]];
      for (VertexId v = 0; v < h.vertex_count(); ++v) round_h[v] = fwd[bwd[v]];
      auto it_g = comp_g.index.find(round_g);
      if (it_g == comp_g.index.end()) continue;
      auto it_h = comp_h.index.find(round_h);
      if (it_h == comp_h.index.end()) continue;
      verdict.status = EquivalenceStatus::equivalent;
      verdict.forward = DigraphMap(g, h, fwd);
      verdict.backward = DigraphMap(h, g, bwd);
      verdict.backward_forward =
          reverse_homotopy(path_to_homotopy(g, g, comp_g, it_g->second));
      verdict.forward_backward =
          reverse_homotopy(path_to_homotopy(h, h, comp_h, it_h->second));
      return verdict;
    }
  }
  verdict.status = EquivalenceStatus::not_equivalent;
  return verdict;
}

bool verify_equivalence(const DigraphMap& forward, const DigraphMap& backward,
                        const Homotopy& backward_forward, const Homotopy& forward_backward) {
  if (forward.domain() != backward.codomain() || forward.codomain() != backward.domain())
    return false;
  DigraphMap round_g = compose(backward, forward);
  DigraphMap round_h = compose(forward, backward);
  DigraphMap id_g = DigraphMap::identity(forward.domain());
  DigraphMap id_h = DigraphMap::identity(forward.codomain());
  auto connects = [](const Homotopy& cert, const DigraphMap& a, const DigraphMap& b) {
    if (cert.frames.empty()) return false;
    const DigraphMap& first = cert.frames.front();
    const DigraphMap& last = cert.frames.back();
    return ((first == a && last == b) || (first == b && last == a)) && verify_homotopy(cert);
  };
  return connects(backward_forward, round_g, id_g) && connects(forward_backward, round_h, id_h);
}

HepResult hep_extension_search(const Digraph& g, const Digraph& x, const DigraphMap& f,
                               const Homotopy& partial) {
  if (!is_subdigraph(x, g))
    fail(Errc::invalid_restriction, "X is not a subdigraph of G");
  if (f.domain() != g)
    fail(Errc::invalid_restriction, "f is not a map out of G");
  if (partial.domain != x || partial.codomain != f.codomain())
    fail(Errc::invalid_restriction, "homotopy is not on X into the codomain of f");
  if (!verify_homotopy(partial))
    fail(Errc::invalid_restriction, "the partial homotopy does not verify");
  if (partial.frames.front() != restrict_map(f, x))
    fail(Errc::invalid_restriction, "the homotopy does not start at f restricted to X");

  const Digraph& cod = f.codomain();
  const std::size_t steps = partial.line.steps();

  std::vector<bool> fixed(g.vertex_count(), false);
  std::vector<VertexId> missing;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (x.has_vertex(g.label(v)))
      fixed[v] = true;
    else
      missing.push_back(v);
  }

  // frames[i] over G; X-part copied from the partial homotopy.
  std::vector<std::vector<VertexId>> frames(steps + 1,
                                            std::vector<VertexId>(g.vertex_count()));
  frames[0] = f.images();
  for (std::size_t i = 1; i <= steps; ++i)
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (fixed[v])
        frames[i][v] = partial.frames[i](x.index_of(g.label(v)));

  // Per missing vertex: its G-neighbors, split by whether they are already
  // assigned when the vertex is reached (fixed vertices and earlier missing).
  std::vector<std::vector<std::pair<VertexId, bool>>> constraints(missing.size());
  {
    std::vector<int> position(g.vertex_count(), -1);
    for (std::size_t k = 0; k < missing.size(); ++k) position[missing[k]] = static_cast<int>(k);
    for (std::size_t k = 0; k < missing.size(); ++k) {
      VertexId v = missing[k];
      for (auto w : g.out_neighbors(v))
        if (fixed[w] || position[w] < static_cast<int>(k))
          constraints[k].emplace_back(w, true);  // edge v -> w
      for (auto w : g.in_neighbors(v))
        if (fixed[w] || position[w] < static_cast<int>(k))
          constraints[k].emplace_back(w, false);  // edge w -> v
    }
  }

  HepResult result;

  // The fixed part of a frame must already be valid on G's edges (G may have
  // edges between X-vertices that X itself lacks).
  auto fixed_part_ok = [&](std::size_t i) {
    for (auto [from, to] : g.edges()) {
      if (!fixed[from] || !fixed[to]) continue;
      VertexId a = frames[i][from], b = frames[i][to];
      if (a != b && !cod.has_edge(a, b)) return false;
      char orient = partial.line.orientation(i - 1);
      VertexId pa = frames[i - 1][from];
      if (pa != a && (orient == '+' ? !cod.has_edge(pa, a) : !cod.has_edge(a, pa)))
        return false;  // holds when X is induced; rechecked for safety
    }
    return true;
  };

  std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t i, std::size_t k) {
    if (i > steps) return true;
    if (k == 0 && !fixed_part_ok(i)) return false;
    if (k == missing.size()) return search(i + 1, 0);
    VertexId v = missing[k];
    char orient = partial.line.orientation(i - 1);
    for (VertexId w = 0; w < cod.vertex_count(); ++w) {
      ++result.candidates_tried;
      VertexId prev = frames[i - 1][v];
      if (prev != w && (orient == '+' ? !cod.has_edge(prev, w) : !cod.has_edge(w, prev)))
        continue;
      bool ok = true;
      for (auto [u, outgoing] : constraints[k]) {
        VertexId a = outgoing ? w : frames[i][u];
        VertexId b = outgoing ? frames[i][u] : w;
        if (a != b && !cod.has_edge(a, b)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      frames[i][v] = w;
      if (search(i, k + 1)) return true;
    }
    return false;
  };

  if (!search(1, 0)) return result;

  Homotopy extension;
  extension.domain = g;
  extension.codomain = cod;
  extension.line = partial.line;
  for (const auto& images : frames) extension.frames.emplace_back(g, cod, images);
  result.extension = std::move(extension);
  return result;
}

}  // namespace dgh
