// Acceptance runner: one PASS/FAIL line per criterion, then a summary.
//
// Exit status is 0 when every criterion passes or fails only in the way
// listed in kKnownRed (each entry states the exact expected failure), and 1
// otherwise. A known-red criterion that unexpectedly passes also exits 1 so
// the list cannot go stale.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nilgraph/algebra.hpp"
#include "nilgraph/census.hpp"
#include "nilgraph/error.hpp"
#include "nilgraph/families.hpp"
#include "nilgraph/graph.hpp"
#include "nilgraph/schreier.hpp"
#include "nilgraph/spectra.hpp"
#include "nilgraph/verify.hpp"
#include "oracles.hpp"

using namespace nilgraph;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string red_signature;  // compared against kKnownRed on failure

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

// Criterion id -> signature of the failure we expect and can explain.
const std::map<int, std::string> kKnownRed = {
    {5, "single-label stars are not singular"},
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

Subspace span_named(const LabeledDigraph& g, const std::vector<NamedVector>& vs) {
  std::vector<RatRow> rows;
  for (const auto& v : vs) rows.push_back(to_row(g, v));
  return Subspace::span_of(Subspace::Ambient::Vertex, g.vertex_count(), rows);
}

NamedVector nv(std::initializer_list<std::pair<const char*, int>> terms) {
  NamedVector out;
  for (const auto& [n, c] : terms) out.emplace_back(n, Rational(c));
  return out;
}

std::vector<std::string> names(const LabeledDigraph& g, const std::vector<VertexIndex>& vs) {
  std::vector<std::string> out;
  for (auto v : vs) out.push_back(g.vertex_name(v));
  return out;
}

// Census runs shared by several criteria.
struct CensusRun {
  CensusFamily family;
  CensusResult result;
  double seconds = 0;
};

CensusRun run(CensusOptions o) {
  const auto t0 = Clock::now();
  CensusRun r{o.family, run_census(o), 0};
  r.seconds = seconds_since(t0);
  return r;
}

std::size_t count_containing(const CensusResult& r, const std::string& needle) {
  std::size_t n = 0;
  for (const auto& row : r.rows)
    for (const auto& d : row.disagreements)
      if (d.find(needle) != std::string::npos) {
        ++n;
        break;
      }
  return n;
}

// Rows with a disagreement not starting with "verify:" and not in `ignore`.
std::size_t prediction_failures(const CensusResult& r, const std::set<std::string>& ignore = {}) {
  std::size_t n = 0;
  for (const auto& row : r.rows)
    for (const auto& d : row.disagreements)
      if (d.rfind("verify:", 0) != 0 && !ignore.contains(d)) {
        ++n;
        break;
      }
  return n;
}

std::string first_failure(const CensusResult& r, const std::set<std::string>& ignore = {}) {
  for (const auto& row : r.rows)
    for (const auto& d : row.disagreements)
      if (d.rfind("verify:", 0) != 0 && !ignore.contains(d)) return row.descriptor + ": " + d;
  return "";
}

// Random simple graph whose edges are the union of `p` disjoint perfect
// matchings on q vertices, matching l labeled Z<l+1>, random directions.
std::optional<LabeledDigraph> random_uniform_graph(std::mt19937_64& rng, std::size_t q, std::size_t p) {
  std::set<std::pair<std::size_t, std::size_t>> used;
  LabeledDigraph::Builder b;
  for (std::size_t v = 0; v < q; ++v) b.add_vertex("v" + std::to_string(v + 1));
  for (std::size_t l = 0; l < p; ++l) {
    std::vector<std::size_t> order(q);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 0; i < q; i += 2) {
      auto e = std::minmax(order[i], order[i + 1]);
      if (!used.insert(e).second) return std::nullopt;
      const bool flip = rng() & 1;
      const auto tail = flip ? e.second : e.first, head = flip ? e.first : e.second;
      b.add_edge("v" + std::to_string(tail + 1), "v" + std::to_string(head + 1), "Z" + std::to_string(l + 1));
    }
  }
  try {
    return b.build();
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

int main() {
  std::map<int, Outcome> outcomes;
  std::map<int, std::string> titles;

  // ---- 1
  {
    titles[1] = "triangle brackets";
    Outcome& o = outcomes[1];
    const std::string text = fixtures::read("triangle_multiedge.graph");
    const auto t0 = Clock::now();
    const auto a = NilAlgebra::build(parse_graph(text));
    const bool ok = bracket(a, a.vertex(0), a.vertex(1)) == a.label(0) &&
                    bracket(a, a.vertex(0), a.vertex(2)) == a.label(1) &&
                    bracket(a, a.vertex(1), a.vertex(2)) == a.label(0) - a.label(1);
    const double s = seconds_since(t0);
    o.require(ok, "bracket mismatch");
    o.require(s < 1e-3, "took " + fmt_seconds(s));
    o.detail += (o.detail.empty() ? "" : " ") + std::string("[v1,v2]=Z1 [v1,v3]=Z2 [v2,v3]=Z1-Z2 in ") +
                std::to_string(static_cast<long>(s * 1e6)) + "us";
  }

  // ---- 2
  {
    titles[2] = "four-cycle and tree abelian factors";
    Outcome& o = outcomes[2];
    const auto g1 = fixtures::graph("c4_standard.graph");
    o.require(abelian_factor(NilAlgebra::build(g1)) ==
                  span_named(g1, {nv({{"v1", 1}, {"v3", 1}}), nv({{"v2", 1}, {"v4", 1}})}),
              "C4 standard");
    o.require(abelian_factor(NilAlgebra::build(fixtures::graph("six_vertex_tree.graph"))).is_zero(), "tree");
    o.require(abelian_factor(NilAlgebra::build(fixtures::graph("c4_one_reversed.graph"))).is_zero(),
              "C4 one reversed");
    if (o.pass) o.detail = "span{v1+v3, v2+v4}; 0; 0";
  }

  // Census runs feeding criteria 3-8 and 11.
  CensusOptions base;
  base.seed = 0;
  base.verify = true;
  base.classify = true;

  auto star_opts = base;
  star_opts.family = CensusFamily::Star;
  star_opts.max_n = 5;
  star_opts.deltas_per_spec = 2;
  const auto stars = run(star_opts);

  auto dstar_opts = base;
  dstar_opts.family = CensusFamily::DoubleStar;
  dstar_opts.max_n = 3;
  dstar_opts.classify = false;
  const auto dstars = run(dstar_opts);

  auto c1_opts = base;
  c1_opts.family = CensusFamily::SingleLabelCycle;
  c1_opts.max_n = 12;
  const auto cycles1 = run(c1_opts);

  auto cm_opts = base;
  cm_opts.family = CensusFamily::MultiLabelCycle;
  cm_opts.max_n = 10;
  cm_opts.label_alphabet = 3;
  cm_opts.classify = false;
  const auto cyclesm = run(cm_opts);

  auto path_opts = base;
  path_opts.family = CensusFamily::Path;
  path_opts.max_n = 9;
  path_opts.classify = false;
  const auto paths = run(path_opts);

  const std::vector<const CensusRun*> all_runs{&stars, &dstars, &cycles1, &cyclesm, &paths};
  std::size_t census_graphs = 0;
  for (const auto* r : all_runs) census_graphs += r->result.rows.size();

  // ---- 3
  {
    titles[3] = "script A values and containment";
    Outcome& o = outcomes[3];
    const auto g1 = fixtures::graph("c4_standard.graph");
    const auto g2 = fixtures::graph("six_vertex_tree.graph");
    o.require(names(g1, script_a(g1)) == std::vector<std::string>{"v1", "v2", "v3", "v4"}, "A(G1)");
    o.require(names(g2, script_a(g2)) == std::vector<std::string>{"v1", "v5"}, "A(G2)");
    std::size_t bad = 0;
    for (const auto* r : all_runs) bad += count_containing(r->result, "verify:script_a_containment");
    o.require(bad == 0, std::to_string(bad) + " census graphs violate containment");
    o.detail += (o.detail.empty() ? "" : " ") + std::string("containment checked on ") +
                std::to_string(census_graphs) + " census graphs";
  }

  // ---- 4
  {
    titles[4] = "star abelian factor and complement";
    Outcome& o = outcomes[4];
    const std::set<std::string> other{"star characteristic polynomial", "star singular"};
    const std::size_t bad = prediction_failures(stars.result, other);
    o.require(stars.result.rows.size() >= 500, "only " + std::to_string(stars.result.rows.size()) + " specs");
    o.require(bad == 0, std::to_string(bad) + " specs disagree, e.g. " + first_failure(stars.result, other));
    // Worked example: 3-dim A and 4-vector S.
    const auto g = fixtures::graph("star_321.graph");
    const auto a = NilAlgebra::build(g);
    o.require(abelian_factor(a) == span_named(g, {nv({{"v1,1", 1}, {"v1,3", -1}}), nv({{"v1,2", 1}, {"v1,3", 1}}),
                                                  nv({{"v2,1", -1}, {"v2,2", -1}})}),
              "example basis");
    const auto perp = center_perp(a);
    std::vector<RatRow> rows;
    for (const auto& u : perp) rows.push_back(u.coords);
    o.require(perp.size() == 4 &&
                  Subspace::span_of(Subspace::Ambient::Vertex, 7, rows) ==
                      span_named(g, {nv({{"v0", 1}}), nv({{"v1,1", 1}, {"v1,2", -1}, {"v1,3", 1}}),
                                     nv({{"v2,1", 1}, {"v2,2", -1}}), nv({{"v3,1", 1}})}),
              "example complement");
    o.require(stars.seconds < 10, "took " + fmt_seconds(stars.seconds));
    o.detail += (o.detail.empty() ? "" : " ") + std::to_string(stars.result.rows.size()) + " specs in " +
                fmt_seconds(stars.seconds) + " (with verify and classify)";
  }

  // ---- 5
  {
    titles[5] = "star spectra";
    Outcome& o = outcomes[5];
    const std::size_t poly_bad = count_containing(stars.result, "star characteristic polynomial");
    o.require(poly_bad == 0, std::to_string(poly_bad) + " char poly mismatches");
    // Rows come back in task order, so k can be read off the task list.
    const auto tasks = census_tasks(star_opts);
    std::size_t not_singular = 0, not_singular_single_label = 0;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      if (stars.result.rows[i].status == SingularityStatus::SingularCertified) continue;
      ++not_singular;
      if (std::get<StarSpec>(tasks[i]).k() == 1) ++not_singular_single_label;
    }
    o.require(not_singular == 0, std::to_string(not_singular) + "/" + std::to_string(stars.result.rows.size()) +
                                     " stars not SingularCertified");
    if (not_singular > 0 && not_singular == not_singular_single_label && poly_bad == 0) {
      o.red_signature = "single-label stars are not singular";
      o.detail += " (all have k=1: the restricted operator is the 2x2 block [[0,-m a],[a,0]], "
                  "nonsingular for a != 0; every k>=2 star is SingularCertified and the char poly "
                  "identity holds for all specs)";
    }
  }

  // ---- 6
  {
    titles[6] = "double stars";
    Outcome& o = outcomes[6];
    const std::size_t bad = prediction_failures(dstars.result);
    o.require(bad == 0, std::to_string(bad) + " pairs disagree, e.g. " + first_failure(dstars.result));
    const auto g = fixtures::graph("double_star.graph");
    o.require(abelian_factor(NilAlgebra::build(g)) ==
                  span_named(g, {nv({{"v1,1", 1}, {"v1,2", -1}}), nv({{"v2,1", 1}, {"v2,2", -1}}),
                                 nv({{"w1,1", 1}, {"w1,2", -1}})}),
              "example basis");
    o.detail += (o.detail.empty() ? "" : " ") + std::to_string(dstars.result.rows.size()) + " spec pairs in " +
                fmt_seconds(dstars.seconds);
  }

  // ---- 7
  {
    titles[7] = "single-label cycles";
    Outcome& o = outcomes[7];
    const std::size_t bad = prediction_failures(cycles1.result);
    o.require(bad == 0, std::to_string(bad) + " cycles disagree, e.g. " + first_failure(cycles1.result));
    o.require(cycles1.seconds < 30, "took " + fmt_seconds(cycles1.seconds));
    o.detail += (o.detail.empty() ? "" : " ") + std::to_string(cycles1.result.rows.size()) +
                " oriented cycles (3<=n<=12) in " + fmt_seconds(cycles1.seconds) + " (with verify and classify)";
  }

  // ---- 8
  {
    titles[8] = "multi-label cycles";
    Outcome& o = outcomes[8];
    const std::size_t bad = prediction_failures(cyclesm.result);
    o.require(bad == 0, std::to_string(bad) + " cycles disagree, e.g. " + first_failure(cyclesm.result));
    o.detail += (o.detail.empty() ? "" : " ") + std::to_string(cyclesm.result.rows.size()) +
                " label sequences up to rotation (3<=n<=10, 3 labels)";
  }

  // ---- 9
  {
    titles[9] = "Schreier graphs";
    Outcome& o = outcomes[9];
    const auto t0 = Clock::now();
    const auto g = fixtures::graph("schreier5.graph");
    const auto p = two_path_classes(g);
    o.require(p.beta() == 2 && names(g, p.classes[0]) == std::vector<std::string>{"v1", "v2", "v5"} &&
                  names(g, p.classes[1]) == std::vector<std::string>{"v3", "v4"},
              "example classes");
    const auto xi = xi_basis(g);
    o.require(xi.size() == 2 && xi[0] == to_row(g, nv({{"v1", 1}, {"v2", 1}, {"v5", 1}})) &&
                  xi[1] == to_row(g, nv({{"v3", 1}, {"v4", 1}})),
              "example xi");

    std::mt19937_64 rng(0);
    std::size_t built = 0, bad_span = 0, bad_j = 0;
    while (built < 150) {
      const std::size_t n = 1 + rng() % 8, labels = 1 + rng() % 3;
      std::vector<std::string> ls;
      std::vector<Permutation> perms;
      for (std::size_t l = 0; l < labels; ++l) {
        ls.push_back("Z" + std::to_string(l + 1));
        Permutation perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        perms.push_back(std::move(perm));
      }
      LabeledDigraph h;
      try {
        h = schreier_from_permutations(ls, perms);
      } catch (const Error&) {
        continue;
      }
      ++built;
      const auto a = NilAlgebra::build(h);
      if (Subspace::span_of(Subspace::Ambient::Vertex, n, xi_basis(h)) != oracle_abelian_factor(a)) ++bad_span;
      for (std::size_t l = 0; l < h.label_count(); ++l)
        if (j_via_action(h, l) != j_matrix(a, l).matrix) {
          ++bad_j;
          break;
        }
    }
    const double s = seconds_since(t0);
    o.require(bad_span == 0, std::to_string(bad_span) + " xi spans differ");
    o.require(bad_j == 0, std::to_string(bad_j) + " j mismatches");
    o.require(s < 10, "took " + fmt_seconds(s));
    o.detail += (o.detail.empty() ? "" : " ") + std::to_string(built) + " random connected Schreier graphs in " +
                fmt_seconds(s);
  }

  // ---- 10
  {
    titles[10] = "uniform colorings";
    Outcome& o = outcomes[10];
    const auto g = fixtures::graph("uniform_363.graph");
    const auto a = NilAlgebra::build(g);
    const auto expected = [](const Rational& A, const Rational& B, const Rational& C) {
      return RatMatrix::from_rows({{0, -A, 0, -C, 0, -B},
                                   {A, 0, -C, 0, -B, 0},
                                   {0, C, 0, -B, 0, -A},
                                   {C, 0, B, 0, -A, 0},
                                   {0, B, 0, A, 0, -C},
                                   {B, 0, A, 0, C, 0}},
                                  6);
    };
    // Linear in (a, b, c): the coordinate labels plus one generic point.
    bool matrix_ok = j_matrix(a, std::vector<Rational>{2, 3, 5}).matrix == expected(2, 3, 5);
    for (std::size_t l = 0; l < 3; ++l) {
      std::vector<Rational> e(3, 0);
      e[l] = 1;
      matrix_ok = matrix_ok && j_matrix(a, e).matrix == expected(e[0], e[1], e[2]);
    }
    o.require(matrix_ok, "6x6 matrix");
    const auto v = classify(a);
    o.require(v.status != SingularityStatus::SingularCertified, "(3,6,3) classified singular");

    const auto c8 = classify(NilAlgebra::build(fixtures::graph("c8_uniform_482.graph")));
    o.require(c8.status == SingularityStatus::AlmostNonsingularCertified, "C8 status " + to_string(c8.status));
    o.require(c8.witnesses.size() == 2 && c8.witnesses[0].coeffs == std::vector<Rational>{1, 0, 0, 0} &&
                  c8.witnesses[0].det == 0 && c8.witnesses[1].coeffs == std::vector<Rational>{1, 0, 1, 0} &&
                  c8.witnesses[1].det != 0,
              "C8 witnesses");

    std::mt19937_64 rng(0);
    std::size_t certified = 0, attempts = 0, bad = 0;
    std::set<std::pair<std::size_t, std::size_t>> shapes;
    while (certified + bad < 20 && attempts < 100000) {
      ++attempts;
      const std::size_t q = 4 + 2 * (rng() % 4);  // 4..10
      const std::size_t p = 2 + rng() % std::min<std::size_t>(3, q - 2);
      const auto h = random_uniform_graph(rng, q, p);
      if (!h) continue;
      const auto blocks = uniform_blocks(*h);
      bool ok = blocks.params.s == p && blocks.params.r == q / 2 && blocks.all_nonsingular;
      for (const auto& l : blocks.labels) ok = ok && l.block_diagonal && l.eigenvalues_pm_i;
      if (classify(NilAlgebra::build(*h)).status == SingularityStatus::SingularCertified) ok = false;
      ok ? ++certified : ++bad;
      shapes.insert({p, q});
    }
    o.require(certified == 20, std::to_string(certified) + "/20 random uniform graphs certified");
    o.detail += (o.detail.empty() ? "" : " ") + std::string("(3,6,3): ") + to_string(v.status) +
                "; C8: witnesses Z1 (det 0) and Z1+Z3 (det " + to_string(c8.witnesses.back().det) + "); " +
                std::to_string(certified) + " random s=p graphs over " + std::to_string(shapes.size()) +
                " (p,q) shapes certified";
  }

  // ---- 11
  {
    titles[11] = "property suite on census graphs";
    Outcome& o = outcomes[11];
    std::map<std::string, std::size_t> failures;
    for (const auto* r : all_runs)
      for (const auto& row : r->result.rows)
        for (const auto& d : row.disagreements)
          if (d.rfind("verify:", 0) == 0) ++failures[d.substr(7)];
    for (const auto& [name, n] : failures) o.require(false, name + " failed on " + std::to_string(n) + " graphs");
    o.detail += (o.detail.empty() ? "" : " ") + std::string("all checks on ") + std::to_string(census_graphs) +
                " graphs (stars, double stars, cycles, paths)";
  }

  int unexpected = 0;
  std::size_t passed = 0;
  for (const auto& [id, o] : outcomes) {
    const auto known = kKnownRed.find(id);
    std::string tag = o.pass ? "PASS" : "FAIL";
    if (!o.pass && known != kKnownRed.end() && o.red_signature == known->second) {
      tag = "FAIL (known)";
    } else if (!o.pass || known != kKnownRed.end()) {
      ++unexpected;
      if (o.pass) tag = "PASS (listed as known red; update the list)";
    }
    if (o.pass) ++passed;
    std::printf("criterion %2d %-14s %s: %s\n", id, tag.c_str(), titles[id].c_str(), o.detail.c_str());
  }
  std::printf("%zu/%zu criteria pass; %d unexpected result(s)\n", passed, outcomes.size(), unexpected);
  return unexpected == 0 ? 0 : 1;
}
