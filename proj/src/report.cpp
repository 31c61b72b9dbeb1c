#include "nilgraph/report.hpp"

#include "nilgraph/error.hpp"
#include "nilgraph/families.hpp"
#include "nilgraph/schreier.hpp"

namespace nilgraph {

namespace {

Json combination(std::span<const Rational> coords, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) out.push_back(Json::array({to_string(coords[i]), names[i]}));
  return out;
}

Json rationals(std::span<const Rational> xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

}  // namespace

Json info_report(const LabeledDigraph& g) {
  const auto a = NilAlgebra::build(g);
  const auto diag = diagnostics(g);
  const auto derived = derived_algebra(a);
  const auto af = abelian_factor(a);
  const auto perp = center_perp(a);
  const auto z = center(a);

  Json r;
  r["vertices"] = g.vertices();
  r["labels"] = g.labels();
  r["edge_count"] = g.edge_count();
  r["diagnostics"] = {{"connected", diag.connected},
                      {"simple", diag.simple},
                      {"schreier", diag.schreier},
                      {"max_degree", diag.max_degree}};
  r["dims"] = {{"V", g.vertex_count()},
               {"C", g.label_count()},
               {"derived", derived.span.dim()},
               {"center", z.dim()},
               {"abelian_factor", af.dim()}};
  Json derived_basis = Json::array();
  for (std::size_t i = 0; i < derived.span.dim(); ++i)
    derived_basis.push_back(combination(derived.span.basis().row(i), g.labels()));
  r["derived_basis"] = derived_basis;

  Json basis = Json::array();
  for (std::size_t i = 0; i < af.dim(); ++i) basis.push_back(combination(af.basis().row(i), g.vertices()));
  r["abelian_factor_basis"] = basis;

  Json cp = Json::array();
  for (const auto& u : perp)
    cp.push_back({{"vector", combination(u.coords, g.vertices())}, {"norm_sq", to_string(u.norm_sq)}});
  r["center_perp"] = cp;

  Json warnings = Json::array();
  if (!derived.equals_label_span)
    warnings.push_back("derived algebra is a proper subspace of span(C)");
  if (diag.simple) {
    Json script = Json::array();
    for (auto v : script_a(g)) script.push_back(g.vertex_name(v));
    r["script_a"] = script;
    r["proper_coloring"] = is_proper_coloring(g);
    if (const auto u = uniform_coloring_check(g)) {
      r["uniform_coloring"] = {{"p", u->p}, {"q", u->q}, {"r", u->r}, {"s", u->s}};
    } else {
      r["uniform_coloring"] = nullptr;
    }
  } else {
    r["script_a"] = nullptr;
    warnings.push_back("graph is not simple; A(G) and coloring checks skipped");
  }
  r["warnings"] = warnings;
  return r;
}

Json verdict_report(const NilAlgebra& a, const SingularityVerdict& v, std::size_t expansion_bound) {
  Json r;
  r["status"] = to_string(v.status);
  Json ws = Json::array();
  for (const auto& w : v.witnesses) {
    Json cp = rationals(char_poly(a, w.coeffs).coeffs);
    ws.push_back({{"coeffs", rationals(w.coeffs)}, {"det", to_string(w.det)}, {"char_poly", cp}});
  }
  r["witnesses"] = ws;
  if (v.restricted_dim <= expansion_bound) {
    Json cp = Json::array();
    for (const auto& c : symbolic_char_poly(a, expansion_bound).coeffs)
      cp.push_back(c.to_string(a.label_names()));
    r["char_poly"] = cp;
  } else {
    r["char_poly"] = nullptr;
  }
  r["det"] = v.det ? Json(v.det->to_string(a.label_names())) : Json(nullptr);
  r["samples"] = v.samples;
  r["seed"] = v.seed;
  r["restricted_dim"] = v.restricted_dim;
  r["abelian_nontrivial"] = v.abelian_nontrivial;
  return r;
}

Json schreier_report(const LabeledDigraph& g) {
  const auto part = two_path_classes(g);
  Json classes = Json::array();
  for (const auto& cls : part.classes) {
    Json c = Json::array();
    for (auto v : cls) c.push_back(g.vertex_name(v));
    classes.push_back(c);
  }
  Json xi = Json::array();
  for (const auto& row : xi_basis(g)) xi.push_back(combination(row, g.vertices()));
  return {{"classes", classes}, {"xi", xi}};
}

Json verify_report(const VerifyReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j = {{"name", c.name}, {"applicable", c.applicable}, {"passed", c.passed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(j);
  }
  return {{"passed", r.all_passed()}, {"checks", checks}};
}

Json census_row_report(const CensusRow& row) {
  Json j = {{"spec", row.descriptor}, {"abelian_dim", row.abelian_dim}};
  j["status"] = row.status ? Json(to_string(*row.status)) : Json(nullptr);
  j["script_a_size"] = row.script_a_size ? Json(*row.script_a_size) : Json(nullptr);
  j["agreement"] = row.agreement;
  if (!row.disagreements.empty()) j["disagreements"] = row.disagreements;
  return j;
}

namespace {

template <class T>
T field(const Json& spec, const char* key) {
  if (!spec.contains(key)) throw SpecError(std::string("spec is missing '") + key + "'");
  try {
    return spec.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw SpecError(std::string("spec field '") + key + "' has the wrong type");
  }
}

template <class T>
T field_or(const Json& spec, const char* key, T fallback) {
  return spec.contains(key) ? field<T>(spec, key) : fallback;
}

}  // namespace

StarSpec star_spec_from_json(const Json& spec, const std::string& default_prefix) {
  StarSpec s;
  s.multiplicities = field<std::vector<std::size_t>>(spec, "multiplicities");
  if (spec.contains("delta")) {
    s.delta = field<std::vector<std::vector<int>>>(spec, "delta");
  } else {
    for (auto m : s.multiplicities) s.delta.emplace_back(m, 1);
  }
  s.labels = field_or<std::vector<std::string>>(spec, "labels", {});
  s.prefix = field_or<std::string>(spec, "prefix", default_prefix);
  s.validate();
  return s;
}

LabeledDigraph graph_from_spec(const Json& spec) {
  if (!spec.is_object()) throw SpecError("spec must be a JSON object");
  const auto family = field<std::string>(spec, "family");
  if (family == "star") return make_star(star_spec_from_json(spec));
  if (family == "double_star" || family == "double-star") {
    const auto first = star_spec_from_json(field<Json>(spec, "first"), "v");
    const auto second = star_spec_from_json(field<Json>(spec, "second"), "w");
    return make_double_star(first, second, field_or<std::string>(spec, "bridge_label", "Z1"),
                            field_or<int>(spec, "bridge_dir", 1));
  }
  if (family == "cycle") {
    CycleSpec c;
    c.labels = field<std::vector<std::string>>(spec, "labels");
    c.n = c.labels.size();
    c.orientation = field_or<std::vector<int>>(spec, "orientation", std::vector<int>(c.n, 1));
    return make_cycle(c);
  }
  if (family == "path") {
    return make_path(field<std::size_t>(spec, "n"), field_or<std::string>(spec, "label", "Z1"),
                     field_or<std::vector<int>>(spec, "directions", {}));
  }
  throw SpecError("unknown family '" + family + "'");
}

}  // namespace nilgraph
