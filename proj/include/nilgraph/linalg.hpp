#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "nilgraph/rational.hpp"

namespace nilgraph {

using RatRow = std::vector<Rational>;

// Dense row-major matrix over exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatRow>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  RatRow row_vector(std::size_t r) const;
  RatRow column_vector(std::size_t c) const;

  void append_row(std::span<const Rational> values);

  RatMatrix transpose() const;
  bool is_zero() const;
  bool is_skew_symmetric() const;

  RatMatrix operator*(const RatMatrix& rhs) const;
  RatRow operator*(std::span<const Rational> vec) const;
  RatMatrix operator+(const RatMatrix& rhs) const;
  RatMatrix operator-(const RatMatrix& rhs) const;
  RatMatrix operator-() const;
  RatMatrix scaled(const Rational& factor) const;

  bool operator==(const RatMatrix& rhs) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowReduction {
  RatMatrix rref;                  // zero rows dropped
  std::vector<std::size_t> pivots; // pivot column of each remaining row
};

// Reduced row echelon form; the result is canonical for the row space.
RowReduction row_reduce(RatMatrix m);

std::size_t rank(const RatMatrix& m);

// Rows of the result form a basis of {x : m x = 0}, one per free column,
// with the free column set to 1 (the standard RREF kernel basis).
RatMatrix nullspace(const RatMatrix& m);

Rational determinant(RatMatrix m);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

// Linear subspace of Q^n stored by its canonical RREF basis.
class Subspace {
 public:
  enum class Ambient { Vertex, Label, Full };

  Subspace() = default;
  Subspace(Ambient ambient, std::size_t ambient_dim);  // zero subspace

  static Subspace span_of(Ambient ambient, const RatMatrix& generators);
  static Subspace span_of(Ambient ambient, std::size_t ambient_dim,
                          const std::vector<RatRow>& generators);
  static Subspace whole(Ambient ambient, std::size_t ambient_dim);

  Ambient ambient() const noexcept { return ambient_; }
  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return basis_.rows() == 0; }
  const RatMatrix& basis() const noexcept { return basis_; }

  bool contains(std::span<const Rational> vec) const;
  bool contains(const Subspace& other) const;

  // Sum of subspaces; both must share an ambient space.
  Subspace operator+(const Subspace& other) const;
  Subspace orthogonal_complement() const;

  bool operator==(const Subspace& other) const;

 private:
  Ambient ambient_ = Ambient::Vertex;
  std::size_t ambient_dim_ = 0;
  RatMatrix basis_;
};

std::string to_string(Subspace::Ambient ambient);

}  // namespace nilgraph
