#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "nilgraph/rational.hpp"

namespace nilgraph {

// Sparse multivariate polynomial with rational coefficients. Exponent
// vectors carry no trailing zeros, so the representation is canonical
// regardless of how many indeterminates the caller has in mind.
class Polynomial {
 public:
  using Monomial = std::vector<unsigned>;
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT: implicit by intent
  Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT

  static Polynomial variable(std::size_t index);
  static Polynomial monomial(Monomial exponents, const Rational& coeff);

  bool is_zero() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  unsigned total_degree() const;
  // One past the highest variable index that occurs.
  std::size_t variable_span() const;

  Rational coefficient(const Monomial& exponents) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& b) { return a *= b; }
  Polynomial operator-() const;

  bool operator==(const Polynomial& rhs) const { return terms_ == rhs.terms_; }

  // Point may be longer than variable_span(); shorter throws.
  Rational evaluate(std::span<const Rational> point) const;

  // Substitute polynomials for each variable.
  Polynomial substitute(std::span<const Polynomial> values) const;

  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  static Monomial trimmed(Monomial m);
  void add_term(const Monomial& m, const Rational& c);

  Terms terms_;
};

template <class Ring>
using DenseMatrix = std::vector<std::vector<Ring>>;

// Coefficients of det(x I - A), lowest degree first, computed with the
// division-free Berkowitz recurrence. Works over any commutative ring with
// +, -, * and construction from int.
template <class Ring>
std::vector<Ring> berkowitz(const DenseMatrix<Ring>& a) {
  const std::size_t n = a.size();
  if (n == 0) return {Ring(1)};

  using Vec = std::vector<Ring>;
  // Toeplitz columns: transforms[k - 1] applies when growing from k to k+1.
  std::vector<std::vector<Vec>> transforms(n - 1);
  for (std::size_t size = n; size >= 2; --size) {
    const std::size_t k = size - 1;
    // Leading k x k block, last row R (negated), last column C, corner.
    Vec r_row(k), c_col(k);
    for (std::size_t j = 0; j < k; ++j) {
      r_row[j] = -a[k][j];
      c_col[j] = a[j][k];
    }
    const Ring corner = -a[k][k];

    std::vector<Vec> powers;  // C, A C, A^2 C, ...
    powers.push_back(c_col);
    for (std::size_t i = 0; i + 2 < size; ++i) {
      const Vec& prev = powers.back();
      Vec next(k, Ring(0));
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) next[r] += a[r][c] * prev[c];
      }
      powers.push_back(std::move(next));
    }
    Vec items;
    items.reserve(size + 1);
    items.push_back(Ring(1));
    items.push_back(corner);
    for (const auto& p : powers) {
      Ring s(0);
      for (std::size_t j = 0; j < k; ++j) s += r_row[j] * p[j];
      items.push_back(s);
    }
    // T is (size + 1) x size with T[i:, i] = items[: size - i + 1].
    std::vector<Vec> t(size + 1, Vec(size, Ring(0)));
    for (std::size_t col = 0; col < size; ++col) {
      for (std::size_t row = col; row <= size; ++row) t[row][col] = items[row - col];
    }
    transforms[k - 1] = std::move(t);
  }

  Vec poly{Ring(1), -a[0][0]};  // descending powers
  for (const auto& t : transforms) {
    Vec next(t.size(), Ring(0));
    for (std::size_t r = 0; r < t.size(); ++r) {
      for (std::size_t c = 0; c < poly.size(); ++c) next[r] += t[r][c] * poly[c];
    }
    poly = std::move(next);
  }
  return Vec(poly.rbegin(), poly.rend());
}

// det(A) = (-1)^n * (constant term of det(xI - A)).
template <class Ring>
Ring berkowitz_determinant(const DenseMatrix<Ring>& a) {
  auto coeffs = berkowitz(a);
  Ring d = coeffs.front();
  if (a.size() % 2 == 1) d = -d;
  return d;
}

// Pfaffian of a skew-symmetric matrix by expansion along the first
// remaining row, memoized on the set of remaining indices. Zero for odd
// size. Requires n <= 63.
template <class Ring>
Ring pfaffian(const DenseMatrix<Ring>& a) {
  const std::size_t n = a.size();
  if (n % 2 == 1) return Ring(0);
  if (n > 63) throw std::length_error("pfaffian: matrix too large");
  std::unordered_map<std::uint64_t, Ring> memo;
  auto rec = [&](auto&& self, std::uint64_t rest) -> Ring {
    if (rest == 0) return Ring(1);
    if (auto it = memo.find(rest); it != memo.end()) return it->second;
    const auto i = static_cast<std::size_t>(std::countr_zero(rest));
    const std::uint64_t without_i = rest & (rest - 1);
    Ring total(0);
    bool positive = true;
    for (std::uint64_t bits = without_i; bits != 0; bits &= bits - 1) {
      const auto j = static_cast<std::size_t>(std::countr_zero(bits));
      if (!(a[i][j] == Ring(0))) {
        Ring term = a[i][j] * self(self, without_i & ~(std::uint64_t{1} << j));
        if (positive) {
          total += term;
        } else {
          total -= term;
        }
      }
      positive = !positive;
    }
    memo.emplace(rest, total);
    return total;
  };
  const std::uint64_t all = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
  return rec(rec, all);
}

}  // namespace nilgraph
