// nilgraph: command-line front end.
//
// Exit codes: 0 success, 1 an invariant or prediction disagreed with the
// oracle, 2 bad input (unreadable file, syntax, validation, bad flags).

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nilgraph/census.hpp"
#include "nilgraph/error.hpp"
#include "nilgraph/families.hpp"
#include "nilgraph/report.hpp"
#include "nilgraph/schreier.hpp"
#include "nilgraph/spectra.hpp"
#include "nilgraph/verify.hpp"

using namespace nilgraph;

namespace {

constexpr int kOk = 0;
constexpr int kDisagreement = 1;
constexpr int kInputError = 2;

struct InputError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

LabeledDigraph load_graph(const std::string& path, bool allow_disconnected) {
  ParseOptions opts;
  opts.allow_disconnected = allow_disconnected;
  return parse_graph(read_file(path), opts);
}

// "+-+" -> {1, -1, 1}
std::vector<int> parse_signs(const std::string& text) {
  std::vector<int> out;
  for (char c : text) {
    if (c == '+') {
      out.push_back(1);
    } else if (c == '-') {
      out.push_back(-1);
    } else {
      throw InputError("sign strings use only '+' and '-': '" + text + "'");
    }
  }
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// --- pretty printing -------------------------------------------------------

bool is_combination(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& t : j)
    if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_string()) return false;
  return true;
}

std::string render_combination(const Json& j) {
  if (j.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string c = j[i][0].get<std::string>();
    const bool neg = !c.empty() && c[0] == '-';
    if (neg) c = c.substr(1);
    if (i == 0) {
      s += neg ? "-" : "";
    } else {
      s += neg ? " - " : " + ";
    }
    if (c != "1") s += c + "*";
    s += j[i][1].get<std::string>();
  }
  return s;
}

void pretty(std::ostream& os, const Json& j, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !is_combination(v) && !v.empty()) {
        os << pad << k << ":\n";
        pretty(os, v, indent + 2);
      } else {
        os << pad << k << ": " << (is_combination(v) && !v.empty() ? render_combination(v)
                                   : v.is_string()                 ? v.get<std::string>()
                                                                   : v.dump())
           << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (is_combination(v)) {
        os << pad << "- " << render_combination(v) << "\n";
      } else if (v.is_structured()) {
        os << pad << "-\n";
        pretty(os, v, indent + 2);
      } else {
        os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const Json& j, bool human) {
  if (human) {
    pretty(std::cout, j);
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

Json combination_json(const LabeledDigraph& g, const NamedVector& v) {
  const auto row = to_row(g, v);
  Json out = Json::array();
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i] != 0) out.push_back(Json::array({to_string(row[i]), g.vertex_name(i)}));
  return out;
}

Subspace span_named(const LabeledDigraph& g, const std::vector<NamedVector>& vs) {
  std::vector<RatRow> rows;
  for (const auto& v : vs) rows.push_back(to_row(g, v));
  return Subspace::span_of(Subspace::Ambient::Vertex, g.vertex_count(), rows);
}

// --- subcommands -----------------------------------------------------------

struct Common {
  bool pretty = false;
  bool allow_disconnected = false;
  std::string emit_dot;
};

int cmd_info(const std::string& file, const Common& c) {
  const auto g = load_graph(file, c.allow_disconnected);
  if (!c.emit_dot.empty()) write_file(c.emit_dot, to_dot(g));
  emit(info_report(g), c.pretty);
  return kOk;
}

int cmd_classify(const std::string& file, const Common& c, const ClassifyOptions& opts) {
  const auto g = load_graph(file, c.allow_disconnected);
  const auto a = NilAlgebra::build(g);
  emit(verdict_report(a, classify(a, opts), opts.expansion_bound), c.pretty);
  return kOk;
}

int cmd_schreier(const std::string& what, const std::string& file, const Common& c) {
  const auto g = load_graph(file, c.allow_disconnected);
  Json r = schreier_report(g);
  if (what == "classes") r.erase("xi");
  if (what == "xi") r.erase("classes");
  emit(r, c.pretty);
  return kOk;
}

int cmd_verify(const std::string& file, const Common& c) {
  const auto g = load_graph(file, c.allow_disconnected);
  const auto report = verify_graph(g);
  emit(verify_report(report), c.pretty);
  return report.all_passed() ? kOk : kDisagreement;
}

struct FamilyArgs {
  std::string kind;
  std::string spec_file;
  std::string emit_file;
  // star
  std::vector<std::size_t> m;
  std::string delta;
  std::vector<std::string> labels;
  // double star
  std::vector<std::size_t> m2;
  std::string delta2;
  std::string bridge_label = "Z1";
  int bridge_dir = 1;
  // cycle and path
  std::size_t n = 0;
  std::string label = "Z1";
  std::string orientation;
};

StarSpec star_from_flags(const std::vector<std::size_t>& m, const std::string& delta,
                         const std::vector<std::string>& labels, const std::string& prefix) {
  StarSpec s;
  s.multiplicities = m;
  s.labels = labels;
  s.prefix = prefix;
  if (delta.empty()) {
    for (auto k : m) s.delta.emplace_back(k, 1);
  } else {
    for (const auto& part : split(delta, '|')) s.delta.push_back(parse_signs(part));
  }
  s.validate();
  return s;
}

int cmd_family(const FamilyArgs& f, const Common& c) {
  Json out;
  std::optional<LabeledDigraph> graph;
  bool agree = true;
  auto attach = [&](const LabeledDigraph& g, std::size_t predicted_dim,
                    const std::vector<NamedVector>& basis) {
    const auto af = abelian_factor(NilAlgebra::build(g));
    Json pb = Json::array();
    for (const auto& v : basis) pb.push_back(combination_json(g, v));
    out["prediction"] = {{"abelian_dim", predicted_dim}, {"abelian_basis", pb}};
    const bool ok = predicted_dim == af.dim() && span_named(g, basis) == af;
    out["agreement"] = ok;
    agree = agree && ok;
  };

  if (!f.spec_file.empty()) {
    graph = graph_from_spec(Json::parse(read_file(f.spec_file)));
  } else if (f.kind == "star") {
    const auto spec = star_from_flags(f.m, f.delta, f.labels, "v");
    graph = make_star(spec);
    const auto p = predict_star(spec);
    attach(*graph, p.abelian_dim, p.abelian_basis);
    Json s = Json::array();
    for (const auto& u : p.center_perp)
      s.push_back({{"vector", combination_json(*graph, u.vector)}, {"norm_sq", to_string(u.norm_sq)}});
    out["prediction"]["center_perp"] = s;
    const auto reduced = reduce_star(spec);
    Json cp = Json::array();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < spec.k(); ++i) names.push_back(spec.label(i));
    for (const auto& coeff : reduced.predicted_char_poly) cp.push_back(coeff.to_string(names));
    out["prediction"]["char_poly"] = cp;
  } else if (f.kind == "double-star") {
    const auto s1 = star_from_flags(f.m, f.delta, {}, "v");
    const auto s2 = star_from_flags(f.m2, f.delta2, {}, "w");
    graph = make_double_star(s1, s2, f.bridge_label, f.bridge_dir);
    const auto p = predict_double_star(s1, s2);
    attach(*graph, p.abelian_dim, p.abelian_basis);
  } else if (f.kind == "cycle") {
    CycleSpec spec;
    if (!f.labels.empty()) {
      spec.labels = f.labels;
    } else {
      spec.labels.assign(f.n, f.label);
    }
    spec.n = spec.labels.size();
    spec.orientation = f.orientation.empty() ? std::vector<int>(spec.n, 1) : parse_signs(f.orientation);
    graph = make_cycle(spec);
    const bool constant = std::all_of(spec.labels.begin(), spec.labels.end(),
                                      [&](const auto& l) { return l == spec.labels.front(); });
    if (constant) {
      const auto p = predict_cycle_single_label(spec);
      attach(*graph, p.abelian_dim, p.abelian_basis);
    } else if (spec.opposite_count() == 0) {
      const auto p = predict_cycle_multi_label(spec);
      const auto af = abelian_factor(NilAlgebra::build(*graph));
      out["prediction"] = {{"nontrivial", p.nontrivial},
                           {"run_lengths", p.run_lengths},
                           {"long_paths", p.long_paths},
                           {"shortcut_trivial", p.shortcut_trivial}};
      bool ok = p.nontrivial == !af.is_zero() && (!p.shortcut_trivial || af.is_zero());
      if (p.witness) {
        out["prediction"]["witness"] = combination_json(*graph, *p.witness);
        ok = ok && af.contains(to_row(*graph, *p.witness));
      }
      out["agreement"] = ok;
      agree = ok;
    }
  } else if (f.kind == "path") {
    const auto dirs = f.orientation.empty() ? std::vector<int>{} : parse_signs(f.orientation);
    graph = make_path(f.n, f.label, dirs);
    const auto p = predict_path(f.n, dirs);
    attach(*graph, p.abelian_dim, p.abelian_basis);
  } else {
    throw InputError("unknown family '" + f.kind + "'");
  }

  if (!f.emit_file.empty()) write_file(f.emit_file, serialize_graph(*graph));
  if (!c.emit_dot.empty()) write_file(c.emit_dot, to_dot(*graph));
  out["graph"] = serialize_graph(*graph);
  out["report"] = info_report(*graph);
  emit(out, c.pretty);
  return agree ? kOk : kDisagreement;
}

int cmd_census(const CensusOptions& o, const Common& c) {
  const auto result = run_census(o);
  if (c.pretty) {
    for (const auto& row : result.rows) {
      std::cout << (row.agreement ? "ok   " : "FAIL ") << row.descriptor << "  dim=" << row.abelian_dim;
      if (row.status) std::cout << "  " << to_string(*row.status);
      if (row.script_a_size) std::cout << "  |A|=" << *row.script_a_size;
      for (const auto& d : row.disagreements) std::cout << "  [" << d << "]";
      std::cout << "\n";
    }
    std::cout << result.rows.size() << " rows, " << result.disagreement_count() << " disagreements\n";
  } else {
    Json rows = Json::array();
    for (const auto& row : result.rows) rows.push_back(census_row_report(row));
    std::cout << Json{{"family", to_string(o.family)},
                      {"max_n", o.max_n},
                      {"seed", o.seed},
                      {"rows", rows},
                      {"disagreements", result.disagreement_count()}}
                     .dump(2)
              << "\n";
  }
  return result.all_agree() ? kOk : kDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metric 2-step nilpotent Lie algebras of edge-labeled directed graphs"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--pretty", common.pretty, "Human-readable output instead of JSON");
  app.add_flag("--allow-disconnected", common.allow_disconnected,
               "Accept graphs that are not connected");
  app.add_option("--emit-dot", common.emit_dot, "Also write the graph as DOT to FILE ('-' for stdout)");

  std::string file;

  auto* info = app.add_subcommand("info", "Dimensions, abelian factor, center complement, A(G)");
  info->add_option("FILE", file, "Graph file")->required();

  ClassifyOptions copts;
  auto* cls = app.add_subcommand("classify", "Singularity classification with witnesses");
  cls->add_option("FILE", file, "Graph file")->required();
  cls->add_option("--samples", copts.sample_count, "Random sample points")->capture_default_str();
  cls->add_option("--seed", copts.seed, "Sampling seed")->envname("NILGRAPH_SEED")->capture_default_str();
  cls->add_option("--expansion-bound", copts.expansion_bound,
                  "Largest restricted dimension expanded symbolically")
      ->capture_default_str();

  FamilyArgs fargs;
  auto* fam = app.add_subcommand("family", "Generate a family member and compare with its prediction");
  fam->add_option("KIND", fargs.kind, "star | cycle | double-star | path")
      ->check(CLI::IsMember({"star", "cycle", "double-star", "path"}))
      ->required();
  fam->add_option("--spec", fargs.spec_file, "JSON spec document (overrides the flags)");
  fam->add_option("--emit", fargs.emit_file, "Write the generated graph to FILE");
  fam->add_option("--m", fargs.m, "Star multiplicities, non-increasing")->delimiter(',');
  fam->add_option("--delta", fargs.delta, "Star orientations per label, e.g. '+-+|+-|+'");
  fam->add_option("--labels", fargs.labels, "Label names (star: one per label; cycle: one per edge)")
      ->delimiter(',');
  fam->add_option("--m2", fargs.m2, "Second star multiplicities")->delimiter(',');
  fam->add_option("--delta2", fargs.delta2, "Second star orientations");
  fam->add_option("--bridge-label", fargs.bridge_label, "Label on the bridge edge")->capture_default_str();
  fam->add_option("--bridge-dir", fargs.bridge_dir, "+1: first center to second, -1: reverse")
      ->check(CLI::IsMember({1, -1}))
      ->capture_default_str();
  fam->add_option("--n", fargs.n, "Vertex count (cycle with one label, path)");
  fam->add_option("--label", fargs.label, "Constant label (cycle, path)")->capture_default_str();
  fam->add_option("--orientation", fargs.orientation, "Edge directions as a sign string, e.g. '+++-'");

  std::string schreier_what;
  auto* sch = app.add_subcommand("schreier", "Two-path classes and xi basis of a Schreier graph");
  sch->add_option("WHAT", schreier_what, "classes | xi")
      ->check(CLI::IsMember({"classes", "xi"}))
      ->required();
  sch->add_option("FILE", file, "Graph file")->required();

  CensusOptions census;
  std::string family_name;
  auto* cen = app.add_subcommand("census", "Enumerate a family and compare predictions with the oracle");
  cen->add_option("--family", family_name, "cycle1 | cycle | star | double-star | path")
      ->check(CLI::IsMember({"cycle1", "cycle", "star", "double-star", "path"}))
      ->required();
  cen->add_option("--max-n", census.max_n,
                  "Cycles and paths: largest vertex count. Stars: largest k and m_i")
      ->required();
  cen->add_option("--labels", census.label_alphabet, "Label alphabet size for multi-label cycles")
      ->capture_default_str();
  cen->add_option("--deltas", census.deltas_per_spec, "Random orientations per star multiplicity vector")
      ->capture_default_str();
  cen->add_option("--seed", census.seed, "Seed for random orientations and sampling")
      ->envname("NILGRAPH_SEED")
      ->capture_default_str();
  cen->add_option("--threads", census.threads, "Worker threads")->capture_default_str();
  cen->add_option("--max-rows", census.max_rows, "Refuse ranges estimated above this size")
      ->capture_default_str();
  cen->add_option("--samples", census.samples, "Classification sample points")->capture_default_str();
  bool no_classify = false, no_verify = false;
  cen->add_flag("--no-classify", no_classify, "Skip singularity classification");
  cen->add_flag("--no-verify", no_verify, "Skip the invariant suite");

  auto* ver = app.add_subcommand("verify", "Run every invariant check on one graph");
  ver->add_option("FILE", file, "Graph file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*info) return cmd_info(file, common);
    if (*cls) return cmd_classify(file, common, copts);
    if (*fam) return cmd_family(fargs, common);
    if (*sch) return cmd_schreier(schreier_what, file, common);
    if (*cen) {
      census.family = *parse_census_family(family_name);
      census.classify = !no_classify;
      census.verify = !no_verify;
      return cmd_census(census, common);
    }
    if (*ver) return cmd_verify(file, common);
  } catch (const CensusTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: bad JSON: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
