#include "dgh.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <nlohmann/json.hpp>

#include "dgh/brown.hpp"
#include "dgh/constructions.hpp"
#include "dgh/json_io.hpp"
#include "dgh/path_homology.hpp"

using nlohmann::json;

struct dgh_digraph {
  dgh::Digraph value;
};
struct dgh_map {
  dgh::DigraphMap value;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

dgh_status status_of(dgh::Errc code) {
  switch (code) {
    case dgh::Errc::parse:
      return DGH_ERR_PARSE;
    case dgh::Errc::domain_mismatch:
      return DGH_ERR_DOMAIN;
    case dgh::Errc::path_explosion:
      return DGH_ERR_LIMIT;
    case dgh::Errc::io:
      return DGH_ERR_IO;
    case dgh::Errc::chain_map_violation:
    case dgh::Errc::internal:
      return DGH_ERR_INTERNAL;
    default:
      return DGH_ERR_INVALID;
  }
}

template <typename Fn>
dgh_status guarded(Fn&& fn) {
  try {
    fn();
    t_last_error.clear();
    return DGH_OK;
  } catch (const dgh::Error& e) {
    t_last_error = e.what();
    return status_of(e.code);
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return DGH_ERR_INTERNAL;
  }
}

std::string base_dir_or_empty(const char* base_dir) { return base_dir ? base_dir : ""; }

json maps_to_json(const std::map<std::string, dgh::DigraphMap>& maps) {
  json out = json::object();
  for (const auto& [name, f] : maps) out[name] = dgh::map_to_json(f);
  return out;
}

json construction_to_json(const dgh::ConstructionResult& r) {
  json out;
  out["result"] = dgh::digraph_to_json(r.result);
  out["maps"] = maps_to_json(r.maps);
  if (!r.choices.empty()) out["choices"] = r.choices;
  if (!r.apex.empty()) out["apex"] = r.apex;
  return out;
}

json group_to_json(const dgh::FgAbGroup& g, std::size_t degree) {
  json out;
  out["degree"] = degree;
  out["rank"] = g.rank();
  json torsion = json::array();
  for (const auto& d : g.torsion()) torsion.push_back(d.str());
  out["torsion"] = std::move(torsion);
  out["name"] = g.describe();
  return out;
}

json matrix_to_json(const dgh::IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const dgh::Int& x = m.at(i, j);
      if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        row.push_back(static_cast<long long>(x));
      else
        row.push_back(x.str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

const char* homotopy_status_name(dgh::HomotopyStatus s) {
  switch (s) {
    case dgh::HomotopyStatus::homotopic:
      return "homotopic";
    case dgh::HomotopyStatus::not_homotopic:
      return "not_homotopic";
    default:
      return "budget_exceeded";
  }
}

json verdict_to_json(const dgh::HomotopyVerdict& v) {
  json out;
  out["status"] = homotopy_status_name(v.status);
  out["explored"] = v.explored;
  if (v.certificate) out["certificate"] = dgh::homotopy_to_json(*v.certificate);
  return out;
}

json report_to_json(const dgh::CheckReport& r) {
  json out;
  out["check"] = r.check;
  out["digest"] = r.digest;
  out["pass"] = r.pass;
  out["detail"] = r.detail;
  if (r.seed) out["seed"] = r.seed;
  out["witness"] = json::parse(r.witness_json);
  return out;
}

void emit(const json& doc, int indent, char** out_json) {
  *out_json = dup_string(dgh::dump_json(doc, indent));
}

}  // namespace

extern "C" {

const char* dgh_version(void) { return "0.1.0"; }

const char* dgh_last_error(void) { return t_last_error.c_str(); }

void dgh_string_free(char* text) { std::free(text); }

dgh_status dgh_digraph_parse(const char* text, const char* base_dir, dgh_digraph** out) {
  return guarded([&] {
    if (!text || !out) dgh::fail(dgh::Errc::parse, "null argument");
    *out = new dgh_digraph{dgh::digraph_from_text(text, base_dir_or_empty(base_dir))};
  });
}

dgh_status dgh_digraph_json(const dgh_digraph* g, int indent, char** out) {
  return guarded([&] {
    if (!g || !out) dgh::fail(dgh::Errc::parse, "null argument");
    emit(dgh::digraph_to_json(g->value), indent, out);
  });
}

void dgh_digraph_free(dgh_digraph* g) { delete g; }

size_t dgh_digraph_vertex_count(const dgh_digraph* g) { return g ? g->value.vertex_count() : 0; }

size_t dgh_digraph_edge_count(const dgh_digraph* g) { return g ? g->value.edge_count() : 0; }

int dgh_digraph_equal(const dgh_digraph* a, const dgh_digraph* b) {
  if (!a || !b) return 0;
  return a->value == b->value ? 1 : 0;
}

dgh_status dgh_map_parse(const char* text, const char* base_dir, dgh_map** out) {
  return guarded([&] {
    if (!text || !out) dgh::fail(dgh::Errc::parse, "null argument");
    *out = new dgh_map{dgh::map_from_text(text, base_dir_or_empty(base_dir))};
  });
}

dgh_status dgh_map_json(const dgh_map* f, int indent, char** out) {
  return guarded([&] {
    if (!f || !out) dgh::fail(dgh::Errc::parse, "null argument");
    emit(dgh::map_to_json(f->value), indent, out);
  });
}

void dgh_map_free(dgh_map* f) { delete f; }

dgh_status dgh_build(const char* kind, const dgh_digraph* g, const dgh_digraph* h,
                     const dgh_map* f, const dgh_map* f2, const char* options_json, int indent,
                     char** out_json) {
  return guarded([&] {
    if (!kind || !out_json) dgh::fail(dgh::Errc::parse, "null argument");
    std::string which = kind;
    dgh::SectionChoices overrides;
    if (options_json && *options_json) {
      json options = json::parse(options_json, nullptr, false);
      if (options.is_discarded()) dgh::fail(dgh::Errc::parse, "malformed options JSON");
      if (options.contains("gh_override"))
        for (const auto& [key, value] : options.at("gh_override").items())
          overrides[key] = value.get<std::string>();
    }
    auto need_digraph = [&](const dgh_digraph* p) -> const dgh::Digraph& {
      if (!p) dgh::fail(dgh::Errc::parse, which + " needs a digraph argument");
      return p->value;
    };
    auto need_map = [&](const dgh_map* p) -> const dgh::DigraphMap& {
      if (!p) dgh::fail(dgh::Errc::parse, which + " needs a map argument");
      return p->value;
    };

    json doc;
    if (which == "cone") {
      doc = construction_to_json(dgh::cone(need_digraph(g)));
    } else if (which == "cylinder") {
      doc = construction_to_json(dgh::mapping_cylinder(need_map(f)));
    } else if (which == "mod-cylinder") {
      doc = construction_to_json(dgh::modified_mapping_cylinder(need_map(f)));
    } else if (which == "mod-cone") {
      doc = construction_to_json(dgh::modified_cone(need_map(f), overrides));
    } else if (which == "mod-mapping-cone") {
      dgh::ConstructionResult built = dgh::modified_mapping_cone(need_map(f), overrides);
      doc = construction_to_json(built);
      dgh::Digraph cone_part = dgh::image_digraph(built.maps.at("embed_cone_part"));
      dgh::Digraph cyl_part = dgh::image_digraph(built.maps.at("embed_cyl_part"));
      doc["parts"] = {{"cone_part", dgh::digraph_to_json(cone_part)},
                      {"cylinder_part", dgh::digraph_to_json(cyl_part)},
                      {"overlap", dgh::digraph_to_json(dgh::intersection_of(cone_part, cyl_part))}};
    } else if (which == "tube") {
      doc = construction_to_json(dgh::mapping_tube(need_map(f), need_map(f2)));
    } else if (which == "tube-decomposition") {
      dgh::TubeDecomposition parts = dgh::tube_decomposition(need_map(f), need_map(f2));
      doc["tube"] = dgh::digraph_to_json(parts.tube);
      doc["cylinder_part"] = dgh::digraph_to_json(parts.cylinder_part);
      doc["product_part"] = dgh::digraph_to_json(parts.product_part);
      doc["intersection"] = dgh::digraph_to_json(parts.intersection);
    } else if (which == "s-digraph") {
      dgh::ConstructionResult built = dgh::s_digraph(need_digraph(g), need_digraph(h));
      doc = construction_to_json(built);
      doc["cone"] = dgh::digraph_to_json(built.maps.at("retract").domain());
    } else {
      t_last_error = "unknown construction '" + which + "'";
      throw dgh::Error(dgh::Errc::parse, t_last_error);
    }
    emit(doc, indent, out_json);
  });
}

dgh_status dgh_homology(const dgh_digraph* g, int pmax, int dual, int indent, char** out_json) {
  return guarded([&] {
    if (!g || !out_json || pmax < 0) dgh::fail(dgh::Errc::parse, "bad arguments");
    dgh::HomologyResult res = dual ? dgh::cohomology(g->value, pmax) : dgh::homology(g->value, pmax);
    json doc;
    doc["kind"] = dual ? "cohomology" : "homology";
    doc["pmax"] = pmax;
    json groups = json::array();
    for (std::size_t p = 0; p <= res.p_max; ++p) groups.push_back(group_to_json(res.groups[p], p));
    doc["groups"] = std::move(groups);
    json ranks = json::array();
    for (std::size_t p = 0; p < res.complex.omega_basis.size(); ++p)
      ranks.push_back(res.complex.rank(p));
    doc["omega_ranks"] = std::move(ranks);
    emit(doc, indent, out_json);
  });
}

dgh_status dgh_induced(const dgh_map* f, int pmax, int indent, char** out_json) {
  return guarded([&] {
    if (!f || !out_json || pmax < 0) dgh::fail(dgh::Errc::parse, "bad arguments");
    dgh::HomologyResult cod = dgh::cohomology(f->value.codomain(), pmax);
    dgh::HomologyResult dom = dgh::cohomology(f->value.domain(), pmax);
    std::vector<dgh::GroupHom> homs = dgh::induced_cochain_maps(f->value, cod, dom);
    json doc;
    doc["pmax"] = pmax;
    json degrees = json::array();
    for (std::size_t p = 0; p < homs.size(); ++p) {
      json entry;
      entry["degree"] = p;
      entry["source"] = group_to_json(homs[p].source(), p);
      entry["target"] = group_to_json(homs[p].target(), p);
      entry["matrix"] = matrix_to_json(homs[p].coord_map());
      degrees.push_back(std::move(entry));
    }
    doc["degrees"] = std::move(degrees);
    emit(doc, indent, out_json);
  });
}

dgh_status dgh_homotopic(const dgh_map* f, const dgh_map* g, uint64_t budget, int indent,
                         char** out_json) {
  return guarded([&] {
    if (!f || !g || !out_json) dgh::fail(dgh::Errc::parse, "null argument");
    emit(verdict_to_json(dgh::decide_homotopic(f->value, g->value, budget)), indent, out_json);
  });
}

dgh_status dgh_contractible(const dgh_digraph* g, uint64_t budget, int indent, char** out_json) {
  return guarded([&] {
    if (!g || !out_json) dgh::fail(dgh::Errc::parse, "null argument");
    emit(verdict_to_json(dgh::is_contractible(g->value, budget)), indent, out_json);
  });
}

dgh_status dgh_equivalent(const dgh_digraph* g, const dgh_digraph* h, uint64_t budget,
                          int indent, char** out_json) {
  return guarded([&] {
    if (!g || !h || !out_json) dgh::fail(dgh::Errc::parse, "null argument");
    dgh::EquivalenceVerdict v = dgh::homotopy_equivalent(g->value, h->value, budget);
    json doc;
    doc["status"] = v.status == dgh::EquivalenceStatus::equivalent      ? "equivalent"
                    : v.status == dgh::EquivalenceStatus::not_equivalent ? "not_equivalent"
                                                                         : "budget_exceeded";
    doc["explored"] = v.explored;
    if (v.forward) doc["forward"] = dgh::map_to_json(*v.forward);
    if (v.backward) doc["backward"] = dgh::map_to_json(*v.backward);
    if (v.backward_forward) doc["backward_forward"] = dgh::homotopy_to_json(*v.backward_forward);
    if (v.forward_backward) doc["forward_backward"] = dgh::homotopy_to_json(*v.forward_backward);
    emit(doc, indent, out_json);
  });
}

dgh_status dgh_verify_homotopy(const char* homotopy_json, const char* base_dir, int indent,
                               char** out_json) {
  return guarded([&] {
    if (!homotopy_json || !out_json) dgh::fail(dgh::Errc::parse, "null argument");
    dgh::Homotopy h = dgh::homotopy_from_text(homotopy_json, base_dir_or_empty(base_dir));
    json doc;
    doc["valid"] = dgh::verify_homotopy(h);
    doc["steps"] = h.line.steps();
    emit(doc, indent, out_json);
  });
}

dgh_status dgh_hep_search(const char* request_json, const char* base_dir, int indent,
                          char** out_json) {
  return guarded([&] {
    if (!request_json || !out_json) dgh::fail(dgh::Errc::parse, "null argument");
    json request = json::parse(request_json, nullptr, false);
    if (request.is_discarded()) dgh::fail(dgh::Errc::parse, "malformed request JSON");
    std::string dir = base_dir_or_empty(base_dir);
    dgh::DigraphMap f = dgh::map_from_json(request.at("map"), dir);
    dgh::Digraph sub = dgh::digraph_from_json(request.at("sub"));
    dgh::Homotopy partial = dgh::homotopy_from_json(request.at("homotopy"), dir);
    dgh::HepResult result = dgh::hep_extension_search(f.domain(), sub, f, partial);
    json doc;
    doc["candidates_tried"] = result.candidates_tried;
    doc["extension"] = result.extension ? dgh::homotopy_to_json(*result.extension) : json();
    emit(doc, indent, out_json);
  });
}

dgh_status dgh_verify(const char* check, uint64_t seed, int count, int min_size, int max_size,
                      int degree, int* failures, char** out_json) {
  return guarded([&] {
    if (!check || !out_json || count < 0 || min_size < 1 || max_size < min_size || degree < 1)
      dgh::fail(dgh::Errc::parse, "bad arguments");
    dgh::SuiteOptions options;
    options.seed = seed;
    options.count = static_cast<std::size_t>(count);
    options.min_size = static_cast<std::size_t>(min_size);
    options.max_size = static_cast<std::size_t>(max_size);
    options.degree = static_cast<std::size_t>(degree);
    std::vector<dgh::CheckReport> reports = dgh::run_suite(check, options);
    int failed = 0;
    std::string lines;
    for (const auto& r : reports) {
      if (!r.pass) ++failed;
      lines += report_to_json(r).dump();
      lines += '\n';
    }
    json summary;
    summary["summary"] = {{"total", reports.size()}, {"failed", failed}};
    lines += summary.dump();
    lines += '\n';
    if (failures) *failures = failed;
    *out_json = dup_string(lines);
  });
}

dgh_status dgh_import_dot(const char* dot_text, int indent, char** digraph_json) {
  return guarded([&] {
    if (!dot_text || !digraph_json) dgh::fail(dgh::Errc::parse, "null argument");
    emit(dgh::digraph_to_json(dgh::import_dot(dot_text)), indent, digraph_json);
  });
}

dgh_status dgh_export_dot(const dgh_digraph* g, char** dot_text) {
  return guarded([&] {
    if (!g || !dot_text) dgh::fail(dgh::Errc::parse, "null argument");
    *dot_text = dup_string(dgh::export_dot(g->value));
  });
}

}  // extern "C"
