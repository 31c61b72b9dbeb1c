#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "nilgraph/graph.hpp"
#include "nilgraph/linalg.hpp"
#include "nilgraph/rational.hpp"

namespace nilgraph {

// Sparse vector over the full basis V ∪ C of the algebra: indices below
// the vertex count are vertices, the rest are labels. Zeros are never stored.
class RatVector {
 public:
  RatVector() = default;

  static RatVector basis(std::size_t index) {
    RatVector v;
    v.set(index, 1);
    return v;
  }

  void set(std::size_t index, const Rational& value);
  Rational get(std::size_t index) const;
  const std::map<std::size_t, Rational>& coords() const noexcept { return coords_; }
  bool is_zero() const noexcept { return coords_.empty(); }

  RatVector& operator+=(const RatVector& rhs);
  RatVector& operator-=(const RatVector& rhs);
  RatVector& operator*=(const Rational& rhs);
  friend RatVector operator+(RatVector a, const RatVector& b) { return a += b; }
  friend RatVector operator-(RatVector a, const RatVector& b) { return a -= b; }
  friend RatVector operator*(RatVector a, const Rational& b) { return a *= b; }
  friend RatVector operator*(const Rational& b, RatVector a) { return a *= b; }

  RatRow dense(std::size_t offset, std::size_t length) const;
  static RatVector from_dense(std::span<const Rational> values, std::size_t offset = 0);

  bool operator==(const RatVector&) const = default;

 private:
  std::map<std::size_t, Rational> coords_;
};

// Metric 2-step nilpotent algebra n = span(V) ⊕ span(C) with V ∪ C
// orthonormal and [v_i, v_j] = sum_l c(i, j, l) Z_l.
class NilAlgebra {
 public:
  static NilAlgebra build(const LabeledDigraph& g);

  // Takes a raw structure tensor (n * n * p, index (i * n + j) * p + l)
  // without checking skew symmetry; used to exercise the invariant checks.
  static NilAlgebra from_structure(std::vector<std::string> vertices,
                                   std::vector<std::string> labels,
                                   std::vector<std::int8_t> structure);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t label_count() const noexcept { return labels_.size(); }
  std::size_t dim() const noexcept { return vertex_count() + label_count(); }

  const std::vector<std::string>& vertex_names() const noexcept { return vertices_; }
  const std::vector<std::string>& label_names() const noexcept { return labels_; }

  int structure(std::size_t i, std::size_t j, std::size_t l) const {
    return structure_[(i * vertex_count() + j) * label_count() + l];
  }

  RatVector vertex(std::size_t i) const { return RatVector::basis(i); }
  RatVector label(std::size_t l) const { return RatVector::basis(vertex_count() + l); }

  std::string basis_name(std::size_t index) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::string> labels_;
  std::vector<std::int8_t> structure_;
};

// Bilinear, skew extension of the vertex brackets; label components of the
// inputs bracket to zero. Result lies in span(C).
RatVector bracket(const NilAlgebra& a, const RatVector& x, const RatVector& y);

struct DerivedAlgebra {
  Subspace span;                 // span of all [v_i, v_j], label coordinates
  bool equals_label_span = true; // false flags a strict inclusion
};

DerivedAlgebra derived_algebra(const NilAlgebra& a);

struct JOperator {
  std::vector<Rational> label_coeffs;
  RatMatrix matrix;  // entry (k, i) = <Z, [v_i, v_k]>
};

JOperator j_matrix(const NilAlgebra& a, std::span<const Rational> label_coeffs);
JOperator j_matrix(const NilAlgebra& a, std::size_t label);

// Intersection of ker j(Z_l) over all labels, from the stacked j matrices.
Subspace abelian_factor(const NilAlgebra& a);

// Independent route: integer fraction-free elimination of the system
// [X, v_j] = 0 assembled from bracket evaluations.
Subspace oracle_abelian_factor(const NilAlgebra& a);

// span(C) ⊕ abelian factor, in full coordinates.
Subspace center(const NilAlgebra& a);

// {x : [x, y] = 0 for all y}, solved directly in full coordinates.
Subspace center_direct(const NilAlgebra& a);

struct OrthogonalVector {
  RatRow coords;    // vertex coordinates, primitive integer entries
  Rational norm_sq;
};

// Orthogonal basis of the complement of the abelian factor inside span(V).
std::vector<OrthogonalVector> center_perp(const NilAlgebra& a);

// j(Z) on the complement of the center, in the unnormalized orthogonal
// basis u_1..u_d. gram(a, b) = <j(Z) u_b, u_a>; the matrix of the map in
// the basis u is D^{-1} gram, which is similar to the orthonormal-basis
// matrix D^{-1/2} gram D^{-1/2}.
struct RestrictedJ {
  RatMatrix gram;
  std::vector<Rational> norm_sq;

  std::size_t dim() const noexcept { return norm_sq.size(); }
  RatMatrix operator_matrix() const;
};

RestrictedJ restricted_j(const NilAlgebra& a, std::span<const Rational> label_coeffs);
RestrictedJ restricted_j(const NilAlgebra& a, std::span<const OrthogonalVector> perp,
                         std::span<const Rational> label_coeffs);

}  // namespace nilgraph
