#include "nilgraph/algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace nilgraph {

void RatVector::set(std::size_t index, const Rational& value) {
  if (value == 0) {
    coords_.erase(index);
  } else {
    coords_[index] = value;
  }
}

Rational RatVector::get(std::size_t index) const {
  auto it = coords_.find(index);
  return it == coords_.end() ? Rational(0) : it->second;
}

RatVector& RatVector::operator+=(const RatVector& rhs) {
  for (const auto& [i, c] : rhs.coords_) set(i, get(i) + c);
  return *this;
}

RatVector& RatVector::operator-=(const RatVector& rhs) {
  for (const auto& [i, c] : rhs.coords_) set(i, get(i) - c);
  return *this;
}

RatVector& RatVector::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    coords_.clear();
    return *this;
  }
  for (auto& [i, c] : coords_) c *= rhs;
  return *this;
}

RatRow RatVector::dense(std::size_t offset, std::size_t length) const {
  RatRow out(length);
  for (const auto& [i, c] : coords_) {
    if (i >= offset && i < offset + length) out[i - offset] = c;
  }
  return out;
}

RatVector RatVector::from_dense(std::span<const Rational> values, std::size_t offset) {
  RatVector v;
  for (std::size_t i = 0; i < values.size(); ++i) v.set(offset + i, values[i]);
  return v;
}

NilAlgebra NilAlgebra::build(const LabeledDigraph& g) {
  const std::size_t n = g.vertex_count(), p = g.label_count();
  std::vector<std::int8_t> c(n * n * p, 0);
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    c[(e.tail * n + e.head) * p + e.label] += 1;
    c[(e.head * n + e.tail) * p + e.label] -= 1;
  }
  return from_structure(g.vertices(), g.labels(), std::move(c));
}

NilAlgebra NilAlgebra::from_structure(std::vector<std::string> vertices,
                                      std::vector<std::string> labels,
                                      std::vector<std::int8_t> structure) {
  if (structure.size() != vertices.size() * vertices.size() * labels.size()) {
    throw std::invalid_argument("structure tensor has wrong size");
  }
  NilAlgebra a;
  a.vertices_ = std::move(vertices);
  a.labels_ = std::move(labels);
  a.structure_ = std::move(structure);
  return a;
}

std::string NilAlgebra::basis_name(std::size_t index) const {
  if (index < vertex_count()) return vertices_[index];
  return labels_.at(index - vertex_count());
}

RatVector bracket(const NilAlgebra& a, const RatVector& x, const RatVector& y) {
  const std::size_t n = a.vertex_count(), p = a.label_count();
  if ((!x.is_zero() && x.coords().rbegin()->first >= a.dim()) ||
      (!y.is_zero() && y.coords().rbegin()->first >= a.dim())) {
    throw std::invalid_argument("bracket: vector outside the algebra's basis");
  }
  RatRow acc(p);
  for (const auto& [i, xi] : x.coords()) {
    if (i >= n) break;
    for (const auto& [j, yj] : y.coords()) {
      if (j >= n) break;
      for (std::size_t l = 0; l < p; ++l) {
        const int s = a.structure(i, j, l);
        if (s != 0) acc[l] += s * xi * yj;
      }
    }
  }
  return RatVector::from_dense(acc, n);
}

DerivedAlgebra derived_algebra(const NilAlgebra& a) {
  const std::size_t n = a.vertex_count(), p = a.label_count();
  RatMatrix gens(0, p);
  RatRow row(p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool nonzero = false;
      for (std::size_t l = 0; l < p; ++l) {
        row[l] = a.structure(i, j, l);
        nonzero = nonzero || row[l] != 0;
      }
      if (nonzero) gens.append_row(row);
    }
  }
  DerivedAlgebra d;
  d.span = Subspace::span_of(Subspace::Ambient::Label, gens);
  d.equals_label_span = d.span.dim() == p;
  return d;
}

JOperator j_matrix(const NilAlgebra& a, std::span<const Rational> label_coeffs) {
  const std::size_t n = a.vertex_count(), p = a.label_count();
  if (label_coeffs.size() != p) throw std::invalid_argument("j_matrix: coefficient count mismatch");
  JOperator j{{label_coeffs.begin(), label_coeffs.end()}, RatMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      Rational s = 0;
      for (std::size_t l = 0; l < p; ++l) {
        const int c = a.structure(i, k, l);
        if (c != 0 && label_coeffs[l] != 0) s += c * label_coeffs[l];
      }
      j.matrix(k, i) = s;
    }
  }
  return j;
}

JOperator j_matrix(const NilAlgebra& a, std::size_t label) {
  std::vector<Rational> coeffs(a.label_count());
  coeffs.at(label) = 1;
  return j_matrix(a, coeffs);
}

Subspace abelian_factor(const NilAlgebra& a) {
  const std::size_t n = a.vertex_count();
  RatMatrix stacked(0, n);
  for (std::size_t l = 0; l < a.label_count(); ++l) {
    const auto j = j_matrix(a, l);
    for (std::size_t r = 0; r < n; ++r) stacked.append_row(j.matrix.row(r));
  }
  if (stacked.rows() == 0) return Subspace::whole(Subspace::Ambient::Vertex, n);
  return Subspace::span_of(Subspace::Ambient::Vertex, nullspace(stacked));
}

namespace {

// Kernel of an integer matrix by fraction-free elimination to row echelon
// form followed by rational back substitution.
std::vector<RatRow> integer_kernel(std::vector<std::vector<Integer>> rows, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows.size(); ++col) {
    std::size_t piv = lead;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[lead]);
    for (std::size_t r = lead + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Integer f = rows[r][col], g = rows[lead][col];
      Integer content = 0;
      for (std::size_t c = 0; c < cols; ++c) {
        rows[r][c] = g * rows[r][c] - f * rows[lead][c];
        content = gcd(content, rows[r][c]);
      }
      if (content > 1) {
        for (auto& x : rows[r]) x /= content;
      }
    }
    pivot_cols.push_back(col);
    ++lead;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<RatRow> kernel;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatRow x(cols);
    x[free] = 1;
    for (std::size_t k = pivot_cols.size(); k-- > 0;) {
      const std::size_t pc = pivot_cols[k];
      Rational s = 0;
      for (std::size_t c = pc + 1; c < cols; ++c) {
        if (rows[k][c] != 0 && x[c] != 0) s += Rational(rows[k][c]) * x[c];
      }
      x[pc] = -s / Rational(rows[k][pc]);
    }
    kernel.push_back(std::move(x));
  }
  return kernel;
}

}  // namespace

Subspace oracle_abelian_factor(const NilAlgebra& a) {
  const std::size_t n = a.vertex_count(), p = a.label_count();
  // Row (j, l): coefficient of a_i is the Z_l component of [v_i, v_j].
  std::vector<std::vector<Integer>> rows;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Integer>> block(p, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      const RatVector b = bracket(a, a.vertex(i), a.vertex(j));
      for (const auto& [idx, c] : b.coords()) block[idx - n][i] = c.get_num();
    }
    for (auto& r : block) rows.push_back(std::move(r));
  }
  return Subspace::span_of(Subspace::Ambient::Vertex, n, integer_kernel(std::move(rows), n));
}

Subspace center(const NilAlgebra& a) {
  const std::size_t n = a.vertex_count(), p = a.label_count();
  const auto ab = abelian_factor(a);
  RatMatrix gens(0, n + p);
  RatRow row(n + p);
  for (std::size_t r = 0; r < ab.dim(); ++r) {
    std::fill(row.begin(), row.end(), Rational(0));
    for (std::size_t c = 0; c < n; ++c) row[c] = ab.basis()(r, c);
    gens.append_row(row);
  }
  for (std::size_t l = 0; l < p; ++l) {
    std::fill(row.begin(), row.end(), Rational(0));
    row[n + l] = 1;
    gens.append_row(row);
  }
  return Subspace::span_of(Subspace::Ambient::Full, gens);
}

Subspace center_direct(const NilAlgebra& a) {
  const std::size_t n = a.vertex_count(), p = a.label_count();
  RatMatrix system(0, n + p);
  RatRow row(n + p);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < p; ++l) {
      std::fill(row.begin(), row.end(), Rational(0));
      for (std::size_t i = 0; i < n; ++i) row[i] = a.structure(i, j, l);
      system.append_row(row);
    }
  }
  if (system.rows() == 0) return Subspace::whole(Subspace::Ambient::Full, n + p);
  return Subspace::span_of(Subspace::Ambient::Full, nullspace(system));
}

namespace {

void make_primitive(RatRow& v) {
  Integer den_lcm = 1;
  for (const auto& x : v) {
    if (x != 0) den_lcm = lcm(den_lcm, Integer(x.get_den()));
  }
  Integer num_gcd = 0;
  for (auto& x : v) {
    x *= den_lcm;
    if (x != 0) num_gcd = gcd(num_gcd, Integer(x.get_num()));
  }
  Rational scale = num_gcd == 0 ? Rational(1) : Rational(1) / Rational(num_gcd);
  for (const auto& x : v) {
    if (x != 0) {
      if (x < 0) scale = -scale;
      break;
    }
  }
  for (auto& x : v) x *= scale;
}

}  // namespace

std::vector<OrthogonalVector> center_perp(const NilAlgebra& a) {
  const auto complement = abelian_factor(a).orthogonal_complement();
  std::vector<OrthogonalVector> out;
  for (std::size_t r = 0; r < complement.dim(); ++r) {
    RatRow w = complement.basis().row_vector(r);
    for (const auto& u : out) {
      const Rational f = dot(w, u.coords) / u.norm_sq;
      if (f == 0) continue;
      for (std::size_t c = 0; c < w.size(); ++c) w[c] -= f * u.coords[c];
    }
    make_primitive(w);
    Rational norm = dot(w, w);
    out.push_back({std::move(w), std::move(norm)});
  }
  return out;
}

RatMatrix RestrictedJ::operator_matrix() const {
  RatMatrix m = gram;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (auto& x : m.row(r)) x /= norm_sq[r];
  }
  return m;
}

RestrictedJ restricted_j(const NilAlgebra& a, std::span<const OrthogonalVector> perp,
                         std::span<const Rational> label_coeffs) {
  const auto j = j_matrix(a, label_coeffs).matrix;
  const std::size_t d = perp.size();
  RestrictedJ out{RatMatrix(d, d), {}};
  std::vector<RatRow> images;
  images.reserve(d);
  for (const auto& u : perp) images.push_back(j * std::span<const Rational>(u.coords));
  for (std::size_t r = 0; r < d; ++r) {
    out.norm_sq.push_back(perp[r].norm_sq);
    for (std::size_t c = 0; c < d; ++c) out.gram(r, c) = dot(perp[r].coords, images[c]);
  }
  return out;
}

RestrictedJ restricted_j(const NilAlgebra& a, std::span<const Rational> label_coeffs) {
  const auto perp = center_perp(a);
  return restricted_j(a, perp, label_coeffs);
}

}  // namespace nilgraph
