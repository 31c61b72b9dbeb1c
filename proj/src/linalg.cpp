#include "nilgraph/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace nilgraph {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatRow>& rows, std::size_t cols) {
  RatMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

RatRow RatMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return RatRow(s.begin(), s.end());
}

RatRow RatMatrix::column_vector(std::size_t c) const {
  RatRow out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void RatMatrix::append_row(std::span<const Rational> values) {
  if (values.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

bool RatMatrix::is_skew_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      if ((*this)(r, c) != -(*this)(c, r)) return false;
  return true;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  RatMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        if (rhs(k, c) != 0) out(r, c) += a * rhs(k, c);
      }
    }
  }
  return out;
}

RatRow RatMatrix::operator*(std::span<const Rational> vec) const {
  if (vec.size() != cols_) throw std::invalid_argument("matrix-vector product: shape mismatch");
  RatRow out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(row(r), vec);
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  RatMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const { return *this + (-rhs); }

RatMatrix RatMatrix::operator-() const {
  RatMatrix out = *this;
  for (auto& x : out.data_) x = -x;
  return out;
}

RatMatrix RatMatrix::scaled(const Rational& factor) const {
  RatMatrix out = *this;
  for (auto& x : out.data_) x *= factor;
  return out;
}

RowReduction row_reduce(RatMatrix m) {
  std::size_t lead_row = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(lead_row, c));
    }
    const Rational inv = 1 / m(lead_row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(lead_row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (m(lead_row, c) != 0) m(r, c) -= factor * m(lead_row, c);
      }
    }
    pivots.push_back(col);
    ++lead_row;
  }
  RatMatrix rref(0, m.cols());
  for (std::size_t r = 0; r < lead_row; ++r) rref.append_row(m.row(r));
  return {std::move(rref), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m) { return row_reduce(m).pivots.size(); }

RatMatrix nullspace(const RatMatrix& m) {
  const auto red = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;
  RatMatrix basis(0, m.cols());
  RatRow v(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < red.pivots.size(); ++r) v[red.pivots[r]] = -red.rref(r, free);
    basis.append_row(v);
  }
  return basis;
}

Rational determinant(RatMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const Rational factor = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

Subspace::Subspace(Ambient ambient, std::size_t ambient_dim)
    : ambient_(ambient), ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span_of(Ambient ambient, const RatMatrix& generators) {
  Subspace s(ambient, generators.cols());
  s.basis_ = row_reduce(generators).rref;
  return s;
}

Subspace Subspace::span_of(Ambient ambient, std::size_t ambient_dim,
                           const std::vector<RatRow>& generators) {
  return span_of(ambient, RatMatrix::from_rows(generators, ambient_dim));
}

Subspace Subspace::whole(Ambient ambient, std::size_t ambient_dim) {
  return span_of(ambient, RatMatrix::identity(ambient_dim));
}

bool Subspace::contains(std::span<const Rational> vec) const {
  if (vec.size() != ambient_dim_) throw std::invalid_argument("Subspace::contains: dimension mismatch");
  RatMatrix stacked = basis_;
  stacked.append_row(vec);
  return rank(stacked) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) return false;
  RatMatrix stacked = basis_;
  for (std::size_t r = 0; r < other.dim(); ++r) stacked.append_row(other.basis_.row(r));
  return rank(stacked) == dim();
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw std::invalid_argument("Subspace sum: dimension mismatch");
  RatMatrix stacked = basis_;
  for (std::size_t r = 0; r < other.dim(); ++r) stacked.append_row(other.basis_.row(r));
  return span_of(ambient_, stacked);
}

Subspace Subspace::orthogonal_complement() const {
  if (is_zero()) return whole(ambient_, ambient_dim_);
  return span_of(ambient_, nullspace(basis_));
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient_dim_ == other.ambient_dim_ && basis_ == other.basis_;
}

std::string to_string(Subspace::Ambient ambient) {
  switch (ambient) {
    case Subspace::Ambient::Vertex: return "vertex";
    case Subspace::Ambient::Label: return "label";
    case Subspace::Ambient::Full: return "full";
  }
  return "unknown";
}

}  // namespace nilgraph
