// Test-only reference implementations. Deliberately naive: they trade speed
// for being obviously correct, and are used to check the production paths.
#pragma once

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "nilgraph/graph.hpp"
#include "nilgraph/linalg.hpp"
#include "nilgraph/poly.hpp"

namespace oracle {

using nilgraph::DenseMatrix;
using nilgraph::Polynomial;
using nilgraph::Rational;

inline int permutation_sign(const std::vector<std::size_t>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

// Sum over all permutations.
template <class Ring>
Ring leibniz_det(const DenseMatrix<Ring>& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Ring total(0);
  do {
    Ring term(permutation_sign(p));
    for (std::size_t i = 0; i < n; ++i) term = term * a[i][p[i]];
    total = total + term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// det(x I - A) with x as variable `xvar`, expanded by Leibniz; coefficients
// of x^0..x^n as polynomials in the remaining variables.
inline std::vector<Polynomial> leibniz_char_poly(const DenseMatrix<Polynomial>& a, std::size_t xvar) {
  const std::size_t n = a.size();
  DenseMatrix<Polynomial> m(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = (i == j ? Polynomial::variable(xvar) : Polynomial()) - a[i][j];
  const Polynomial det = leibniz_det(m);
  std::vector<Polynomial> coeffs(n + 1);
  for (const auto& [mono, c] : det.terms()) {
    auto rest = mono;
    unsigned power = 0;
    if (rest.size() > xvar) {
      power = rest[xvar];
      rest[xvar] = 0;
    }
    coeffs.at(power) += Polynomial::monomial(rest, c);
  }
  return coeffs;
}

inline DenseMatrix<Rational> dense(const nilgraph::RatMatrix& m) {
  DenseMatrix<Rational> out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

inline DenseMatrix<Polynomial> lift(const DenseMatrix<Rational>& m) {
  DenseMatrix<Polynomial> out(m.size(), std::vector<Polynomial>(m.empty() ? 0 : m[0].size()));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m[r].size(); ++c) out[r][c] = Polynomial(m[r][c]);
  return out;
}

// Direct check that A x = 0.
inline bool in_kernel(const nilgraph::RatMatrix& a, const std::vector<Rational>& x) {
  const auto y = a * std::span<const Rational>(x);
  return std::all_of(y.begin(), y.end(), [](const Rational& v) { return v == 0; });
}

}  // namespace oracle

namespace fixtures {

inline std::string read(const std::string& name) {
  std::ifstream in(std::string(NILGRAPH_FIXTURE_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline nilgraph::LabeledDigraph graph(const std::string& name) {
  return nilgraph::parse_graph(read(name));
}

}  // namespace fixtures
