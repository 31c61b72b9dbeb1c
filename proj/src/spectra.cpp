#include "nilgraph/spectra.hpp"

#include <random>

#include "nilgraph/error.hpp"

namespace nilgraph {

namespace {

DenseMatrix<Rational> to_dense(const RatMatrix& m) {
  DenseMatrix<Rational> out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

// Z = sum_s beta_s d_s over the derived-algebra basis rows d_s.
std::vector<Rational> combine(const RatMatrix& derived_rows, std::span<const Rational> beta) {
  std::vector<Rational> z(derived_rows.cols());
  for (std::size_t s = 0; s < derived_rows.rows(); ++s) {
    if (beta[s] == 0) continue;
    for (std::size_t l = 0; l < z.size(); ++l) z[l] += beta[s] * derived_rows(s, l);
  }
  return z;
}

}  // namespace

Rational CharPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

CharPoly char_poly(const RestrictedJ& restricted) {
  return {berkowitz(to_dense(restricted.operator_matrix()))};
}

CharPoly char_poly(const NilAlgebra& a, std::span<const Rational> label_coeffs) {
  return char_poly(restricted_j(a, label_coeffs));
}

namespace {

template <class Pick>
DenseMatrix<Polynomial> linear_form_matrix(const NilAlgebra& a,
                                           std::span<const OrthogonalVector> perp, Pick pick) {
  const std::size_t d = perp.size();
  DenseMatrix<Polynomial> m(d, std::vector<Polynomial>(d));
  for (std::size_t l = 0; l < a.label_count(); ++l) {
    std::vector<Rational> unit(a.label_count());
    unit[l] = 1;
    const RatMatrix op = pick(restricted_j(a, perp, unit));
    const Polynomial var = Polynomial::variable(l);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        if (op(r, c) != 0) m[r][c] += var * op(r, c);
  }
  return m;
}

Rational norm_product(std::span<const OrthogonalVector> perp) {
  Rational p = 1;
  for (const auto& u : perp) p *= u.norm_sq;
  return p;
}

}  // namespace

DenseMatrix<Polynomial> symbolic_restricted_operator(const NilAlgebra& a,
                                                     std::span<const OrthogonalVector> perp) {
  return linear_form_matrix(a, perp, [](const RestrictedJ& r) { return r.operator_matrix(); });
}

DenseMatrix<Polynomial> symbolic_restricted_gram(const NilAlgebra& a,
                                                 std::span<const OrthogonalVector> perp) {
  return linear_form_matrix(a, perp, [](const RestrictedJ& r) { return r.gram; });
}

Polynomial symbolic_pfaffian(const NilAlgebra& a, std::span<const OrthogonalVector> perp) {
  return pfaffian(symbolic_restricted_gram(a, perp));
}

SymbolicCharPoly symbolic_char_poly(const NilAlgebra& a, std::size_t bound) {
  const auto perp = center_perp(a);
  if (perp.size() > bound) throw DimensionTooLarge(perp.size(), bound);
  return {berkowitz(symbolic_restricted_operator(a, perp))};
}

Polynomial symbolic_det(const NilAlgebra& a, std::size_t bound) {
  const auto perp = center_perp(a);
  if (perp.size() > bound) throw DimensionTooLarge(perp.size(), bound);
  const Polynomial pf = symbolic_pfaffian(a, perp);
  return pf * pf * (Rational(1) / norm_product(perp));
}

Rational restricted_det(const NilAlgebra& a, std::span<const OrthogonalVector> perp,
                        std::span<const Rational> label_coeffs) {
  return determinant(restricted_j(a, perp, label_coeffs).operator_matrix());
}

std::string to_string(SingularityStatus status) {
  switch (status) {
    case SingularityStatus::SingularCertified: return "SingularCertified";
    case SingularityStatus::AlmostNonsingularCertified: return "AlmostNonsingularCertified";
    case SingularityStatus::NonsingularSampled: return "NonsingularSampled";
    case SingularityStatus::SingularitySampledInconclusive: return "SingularitySampledInconclusive";
  }
  return "Unknown";
}

std::vector<Rational> sample_point(std::size_t dims, std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> num(-10, 10), den(1, 10);
  std::vector<Rational> out(dims);
  if (dims == 0) return out;
  bool nonzero = false;
  while (!nonzero) {
    for (auto& x : out) {
      x = Rational(num(rng), den(rng));
      x.canonicalize();
      nonzero = nonzero || x != 0;
    }
  }
  return out;
}

SingularityVerdict classify(const NilAlgebra& a, const ClassifyOptions& options) {
  SingularityVerdict v;
  v.seed = options.seed;
  const auto perp = center_perp(a);
  v.restricted_dim = perp.size();
  v.abelian_nontrivial = perp.size() < a.vertex_count();

  const auto derived = derived_algebra(a).span;
  const std::size_t t = derived.dim();
  if (t == 0) {
    // Abelian algebra: j(Z) vanishes identically.
    v.status = SingularityStatus::SingularCertified;
    v.det = Polynomial(perp.empty() ? 1 : 0);
    return v;
  }

  // Restrict to Z in the derived algebra: substitute a = sum_s beta_s d_s.
  // The gram matrix is skew, so det = Pf^2 / prod(norm_sq) and the
  // Pfaffian (half the degree) carries the zero test.
  std::optional<Polynomial> pf_in_beta;
  const Rational norms = norm_product(perp);
  if (perp.size() <= options.expansion_bound) {
    const Polynomial pf = symbolic_pfaffian(a, perp);
    v.det = pf * pf * (Rational(1) / norms);
    std::vector<Polynomial> subs(a.label_count());
    for (std::size_t l = 0; l < a.label_count(); ++l) {
      for (std::size_t s = 0; s < t; ++s) {
        if (derived.basis()(s, l) != 0) subs[l] += Polynomial::variable(s) * derived.basis()(s, l);
      }
    }
    pf_in_beta = pf.substitute(subs);
    if (pf_in_beta->is_zero()) {
      v.status = SingularityStatus::SingularCertified;
      return v;
    }
  }

  auto evaluate = [&](std::span<const Rational> beta) -> Rational {
    if (pf_in_beta) {
      const Rational pf = pf_in_beta->evaluate(beta);
      return pf * pf / norms;
    }
    return restricted_det(a, perp, combine(derived.basis(), beta));
  };

  std::optional<Witness> singular, nonsingular;
  auto consider = [&](std::span<const Rational> beta) {
    Witness w{combine(derived.basis(), beta), evaluate(beta)};
    if (w.det == 0) {
      if (!singular) singular = std::move(w);
    } else if (!nonsingular) {
      nonsingular = std::move(w);
    }
    return singular && nonsingular;
  };

  bool done = false;
  // Basis directions, then pairwise sums, then seeded random points.
  for (std::size_t s = 0; s < t && !done; ++s) {
    std::vector<Rational> beta(t);
    beta[s] = 1;
    done = consider(beta);
  }
  for (std::size_t s = 0; s < t && !done; ++s) {
    for (std::size_t u = s + 1; u < t && !done; ++u) {
      std::vector<Rational> beta(t);
      beta[s] = beta[u] = 1;
      done = consider(beta);
    }
  }
  // With a one-dimensional derived algebra every nonzero Z is a multiple of
  // the basis direction and det is homogeneous, so samples add nothing.
  for (std::size_t i = 0; t > 1 && i < options.sample_count && !done; ++i) {
    done = consider(sample_point(t, options.seed, i));
    ++v.samples;
  }

  if (singular && nonsingular) {
    v.status = SingularityStatus::AlmostNonsingularCertified;
    v.witnesses = {*singular, *nonsingular};
  } else if (!nonsingular) {
    // Only reachable without a symbolic determinant.
    v.status = SingularityStatus::SingularitySampledInconclusive;
    if (singular) v.witnesses = {*singular};
  } else if (v.abelian_nontrivial) {
    v.status = SingularityStatus::AlmostNonsingularCertified;
    v.witnesses = {*nonsingular};
  } else {
    v.status = SingularityStatus::NonsingularSampled;
    v.witnesses = {*nonsingular};
  }
  return v;
}

UniformBlocks uniform_blocks(const LabeledDigraph& g) {
  const auto params = uniform_coloring_check(g);
  if (!params) throw NotUniform();
  if (params->s != params->p) throw DegreeMismatch(params->s, params->p);
  if (params->q % 2 != 0 || params->q != 2 * params->r) throw NotUniform();

  const auto algebra = NilAlgebra::build(g);
  const std::size_t n = g.vertex_count();
  UniformBlocks out{*params, {}, true};

  // (x^2 + 1)^r, lowest degree first.
  std::vector<Rational> expected{1};
  for (std::size_t k = 0; k < params->r; ++k) {
    std::vector<Rational> next(expected.size() + 2);
    for (std::size_t i = 0; i < expected.size(); ++i) {
      next[i] += expected[i];
      next[i + 2] += expected[i];
    }
    expected = std::move(next);
  }

  for (LabelIndex l = 0; l < g.label_count(); ++l) {
    LabelBlockCertificate cert;
    cert.label = l;
    for (const auto& e : g.edges()) {
      if (e.label != l) continue;
      cert.matching.emplace_back(e.tail, e.head);
      cert.order.push_back(e.tail);
      cert.order.push_back(e.head);
    }
    RatMatrix perm(n, n);  // column k is the basis vector of order[k]
    for (std::size_t k = 0; k < cert.order.size(); ++k) perm(cert.order[k], k) = 1;
    const auto j = j_matrix(algebra, l).matrix;
    cert.permuted = perm.transpose() * j * perm;

    RatMatrix blocks(n, n);
    for (std::size_t b = 0; b < params->r; ++b) {
      blocks(2 * b, 2 * b + 1) = -1;
      blocks(2 * b + 1, 2 * b) = 1;
    }
    cert.block_diagonal = cert.order.size() == n && cert.permuted == blocks;
    cert.eigenvalues_pm_i = berkowitz(to_dense(j)) == expected;
    out.all_nonsingular = out.all_nonsingular && cert.block_diagonal && cert.eigenvalues_pm_i;
    out.labels.push_back(std::move(cert));
  }
  return out;
}

}  // namespace nilgraph
