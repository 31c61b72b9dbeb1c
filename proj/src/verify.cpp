#include "nilgraph/verify.hpp"

#include "nilgraph/error.hpp"
#include "nilgraph/schreier.hpp"
#include "nilgraph/spectra.hpp"

namespace nilgraph {

bool VerifyReport::all_passed() const {
  for (const auto& c : checks)
    if (c.applicable && !c.passed) return false;
  return true;
}

const CheckResult* VerifyReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<std::string> VerifyReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (c.applicable && !c.passed) out.push_back(c.name);
  return out;
}

namespace {

CheckResult pass(std::string name) { return {std::move(name), true, true, {}}; }
CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), true, false, std::move(detail)};
}
CheckResult skip(std::string name, std::string why) {
  return {std::move(name), false, true, std::move(why)};
}
CheckResult expect(std::string name, bool ok, std::string detail) {
  return ok ? pass(std::move(name)) : fail(std::move(name), std::move(detail));
}

CheckResult check_skew(const NilAlgebra& a) {
  const std::size_t n = a.vertex_count(), p = a.label_count();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < p; ++l) {
        if (a.structure(i, j, l) != -a.structure(j, i, l)) {
          return fail("skew_symmetry", "c(" + a.basis_name(i) + ", " + a.basis_name(j) + ", " +
                                           a.label_names()[l] + ") is not antisymmetric");
        }
      }
      if (bracket(a, a.vertex(i), a.vertex(j)) != RatVector() - bracket(a, a.vertex(j), a.vertex(i)))
        return fail("skew_symmetry", "bracket not antisymmetric on " + a.basis_name(i));
    }
  }
  for (std::size_t l = 0; l < p; ++l)
    if (!j_matrix(a, l).matrix.is_skew_symmetric())
      return fail("skew_symmetry", "j(" + a.label_names()[l] + ") is not skew-symmetric");
  return pass("skew_symmetry");
}

CheckResult check_two_step(const NilAlgebra& a) {
  // Every bracket lies in span(C) and span(C) is central, so [x,[y,z]] = 0
  // for all x, y, z follows by bilinearity.
  const std::size_t n = a.vertex_count(), dim = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto b = bracket(a, a.vertex(i), a.vertex(j));
      if (!b.is_zero() && b.coords().begin()->first < n)
        return fail("two_step", "bracket has a vertex component");
    }
  }
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t l = 0; l < a.label_count(); ++l) {
      if (!bracket(a, RatVector::basis(x), a.label(l)).is_zero())
        return fail("two_step", "[" + a.basis_name(x) + ", " + a.label_names()[l] + "] != 0");
    }
  }
  return pass("two_step");
}

CheckResult check_jz(const NilAlgebra& a) {
  const std::size_t n = a.vertex_count();
  for (std::size_t l = 0; l < a.label_count(); ++l) {
    const auto j = j_matrix(a, l).matrix;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const Rational rhs = bracket(a, a.vertex(i), a.vertex(k)).get(n + l);
        if (j(k, i) != rhs)
          return fail("jz_identity", "<j(Z)" + a.basis_name(i) + ", " + a.basis_name(k) +
                                         "> differs from <Z, [" + a.basis_name(i) + ", " +
                                         a.basis_name(k) + "]>");
      }
    }
  }
  return pass("jz_identity");
}

CheckResult check_linearity(const NilAlgebra& a) {
  const std::size_t p = a.label_count();
  for (std::uint64_t trial = 0; trial < 3; ++trial) {
    const auto z1 = sample_point(p, 17, 2 * trial), z2 = sample_point(p, 17, 2 * trial + 1);
    const auto s = sample_point(2, 29, trial);
    std::vector<Rational> combo(p);
    for (std::size_t l = 0; l < p; ++l) combo[l] = s[0] * z1[l] + s[1] * z2[l];
    const auto lhs = j_matrix(a, combo).matrix;
    const auto rhs = j_matrix(a, z1).matrix.scaled(s[0]) + j_matrix(a, z2).matrix.scaled(s[1]);
    if (lhs != rhs) return fail("j_linearity", "j(aZ + bZ') != a j(Z) + b j(Z')");
  }
  return pass("j_linearity");
}

}  // namespace

VerifyReport verify_algebra(const NilAlgebra& a) {
  VerifyReport r;
  r.checks.push_back(check_skew(a));
  r.checks.push_back(check_two_step(a));
  r.checks.push_back(check_jz(a));
  r.checks.push_back(check_linearity(a));

  const auto af = abelian_factor(a);
  r.checks.push_back(expect("oracle_equivalence", af == oracle_abelian_factor(a),
                            "stacked-j and bracket-system abelian factors differ"));
  r.checks.push_back(expect("center_direct", center(a) == center_direct(a),
                            "assembled center differs from the direct solution"));
  const std::size_t perp = center_perp(a).size();
  r.checks.push_back(expect("dimension_bookkeeping",
                            perp + af.dim() + a.label_count() == a.dim(),
                            "dim Z-perp + dim a + |C| = " +
                                std::to_string(perp + af.dim() + a.label_count()) +
                                " but dim n = " + std::to_string(a.dim())));
  return r;
}

VerifyReport verify_graph(const LabeledDigraph& g) {
  const auto a = NilAlgebra::build(g);
  VerifyReport r = verify_algebra(a);
  const auto af = abelian_factor(a);
  const auto diag = diagnostics(g);
  const std::size_t n = g.vertex_count();

  if (!diag.simple) {
    for (const char* name : {"odd_vertex_single_label", "script_a_containment",
                             "script_a_at_most_one", "proper_coloring", "uniform_identities"})
      r.checks.push_back(skip(name, "graph is not simple"));
  } else {
    if (g.label_count() == 1 && n % 2 == 1) {
      r.checks.push_back(expect("odd_vertex_single_label", af.dim() >= 1,
                                "odd vertex count with one label but trivial abelian factor"));
    } else {
      r.checks.push_back(skip("odd_vertex_single_label", "needs one label and odd |V|"));
    }

    const auto script = script_a(g);
    std::vector<RatRow> gens;
    for (auto v : script) {
      RatRow e(n);
      e[v] = 1;
      gens.push_back(std::move(e));
    }
    const auto span_a = Subspace::span_of(Subspace::Ambient::Vertex, n, gens);
    r.checks.push_back(expect("script_a_containment", span_a.contains(af),
                              "abelian factor not contained in span of A(G)"));
    if (script.size() <= 1) {
      r.checks.push_back(expect("script_a_at_most_one", af.is_zero(),
                                "|A(G)| <= 1 but abelian factor is nonzero"));
    } else {
      r.checks.push_back(skip("script_a_at_most_one", "|A(G)| >= 2"));
    }

    if (is_proper_coloring(g)) {
      r.checks.push_back(expect("proper_coloring", af.is_zero() && script.empty(),
                                "proper coloring with nonzero abelian factor or nonempty A(G)"));
    } else {
      r.checks.push_back(skip("proper_coloring", "coloring is not proper"));
    }

    if (const auto u = uniform_coloring_check(g)) {
      const std::size_t e = g.edge_count();
      r.checks.push_back(expect("uniform_identities", u->p * u->r == e && u->s * u->q == 2 * e,
                                "p r = |E| or s q = 2|E| fails"));
    } else {
      r.checks.push_back(skip("uniform_identities", "no uniform coloring"));
    }
  }

  if (diag.schreier) {
    const auto xi = xi_basis(g);
    r.checks.push_back(expect("xi_basis", Subspace::span_of(Subspace::Ambient::Vertex, n, xi) == af,
                              "xi vectors do not span the abelian factor"));
    bool same = true;
    for (LabelIndex l = 0; l < g.label_count() && same; ++l)
      same = j_via_action(g, l) == j_matrix(a, l).matrix;
    r.checks.push_back(expect("j_via_action", same, "alpha(Z) - alpha(Z^-1) differs from j(Z)"));
    const SchreierAction act(g);
    bool inverse = true;
    for (LabelIndex l = 0; l < g.label_count(); ++l)
      for (VertexIndex v = 0; v < n; ++v) inverse = inverse && act.apply(l, -1, act.apply(l, 1, v)) == v;
    r.checks.push_back(expect("alpha_inverse", inverse, "alpha(Z^-1) alpha(Z) is not the identity"));
  } else {
    for (const char* name : {"xi_basis", "j_via_action", "alpha_inverse"})
      r.checks.push_back(skip(name, "graph is not a Schreier graph"));
  }
  return r;
}

}  // namespace nilgraph
