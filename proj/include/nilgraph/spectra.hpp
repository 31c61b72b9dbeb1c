#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nilgraph/algebra.hpp"
#include "nilgraph/graph.hpp"
#include "nilgraph/poly.hpp"

namespace nilgraph {

inline constexpr std::size_t kDefaultExpansionBound = 10;
inline constexpr std::size_t kDefaultSampleCount = 200;

// det(x I - B) for the restricted operator B, lowest degree first; monic.
struct CharPoly {
  std::vector<Rational> coeffs;

  std::size_t degree() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  Rational evaluate(const Rational& x) const;
  bool operator==(const CharPoly&) const = default;
};

CharPoly char_poly(const RestrictedJ& restricted);
CharPoly char_poly(const NilAlgebra& a, std::span<const Rational> label_coeffs);

// Coefficients of det(x I - B(a)) in x, each a polynomial in the label
// coefficients a_1..a_p (variable l is label l).
struct SymbolicCharPoly {
  std::vector<Polynomial> coeffs;
};

// Restricted operator as a matrix of linear forms in a_1..a_p.
DenseMatrix<Polynomial> symbolic_restricted_operator(const NilAlgebra& a,
                                                     std::span<const OrthogonalVector> perp);

// The skew gram matrix <j(Z) u_b, u_a> as linear forms in a_1..a_p.
DenseMatrix<Polynomial> symbolic_restricted_gram(const NilAlgebra& a,
                                                 std::span<const OrthogonalVector> perp);

// Pf(gram); det of the restricted operator is Pf^2 / prod(norm_sq).
Polynomial symbolic_pfaffian(const NilAlgebra& a, std::span<const OrthogonalVector> perp);

SymbolicCharPoly symbolic_char_poly(const NilAlgebra& a,
                                    std::size_t bound = kDefaultExpansionBound);

// det of the restricted operator as a polynomial in a_1..a_p. Throws
// DimensionTooLarge when dim of the center's complement exceeds `bound`.
Polynomial symbolic_det(const NilAlgebra& a, std::size_t bound = kDefaultExpansionBound);

Rational restricted_det(const NilAlgebra& a, std::span<const OrthogonalVector> perp,
                        std::span<const Rational> label_coeffs);

enum class SingularityStatus {
  SingularCertified,
  AlmostNonsingularCertified,
  NonsingularSampled,
  SingularitySampledInconclusive,
};

std::string to_string(SingularityStatus status);

struct Witness {
  std::vector<Rational> coeffs;  // over the label basis
  Rational det;
};

struct ClassifyOptions {
  std::size_t sample_count = kDefaultSampleCount;
  std::uint64_t seed = 0;
  std::size_t expansion_bound = kDefaultExpansionBound;
};

struct SingularityVerdict {
  SingularityStatus status = SingularityStatus::NonsingularSampled;
  std::vector<Witness> witnesses;
  std::optional<Polynomial> det;  // absent when the expansion bound was hit
  std::size_t samples = 0;        // random points evaluated
  std::uint64_t seed = 0;
  std::size_t restricted_dim = 0;
  bool abelian_nontrivial = false;
};

// Nonzero rational vector with numerators in [-10, 10] and denominators in
// [1, 10]; depends only on (seed, index).
std::vector<Rational> sample_point(std::size_t dims, std::uint64_t seed, std::uint64_t index);

SingularityVerdict classify(const NilAlgebra& a, const ClassifyOptions& options = {});

struct LabelBlockCertificate {
  LabelIndex label = 0;
  std::vector<std::pair<VertexIndex, VertexIndex>> matching;  // (tail, head)
  std::vector<VertexIndex> order;  // position -> vertex; pairs adjacent
  RatMatrix permuted;              // P^T j(Z_label) P
  bool block_diagonal = false;     // r copies of (0 -1; 1 0)
  bool eigenvalues_pm_i = false;   // char poly equals (x^2 + 1)^r
};

struct UniformBlocks {
  UniformColoring params;
  std::vector<LabelBlockCertificate> labels;
  bool all_nonsingular = false;
};

// Requires a uniform coloring with vertex degree equal to the label count.
// Throws NotUniform or DegreeMismatch.
UniformBlocks uniform_blocks(const LabeledDigraph& g);

}  // namespace nilgraph
