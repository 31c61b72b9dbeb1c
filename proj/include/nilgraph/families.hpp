#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilgraph/graph.hpp"
#include "nilgraph/linalg.hpp"
#include "nilgraph/poly.hpp"
#include "nilgraph/rational.hpp"

namespace nilgraph {

// A vertex combination addressed by name, independent of any graph's
// vertex order. Terms are kept in the order they were produced.
using NamedVector = std::vector<std::pair<std::string, Rational>>;

// Coordinates of `v` in g's vertex order. Throws UnknownVertex.
RatRow to_row(const LabeledDigraph& g, const NamedVector& v);

struct NamedOrthogonal {
  NamedVector vector;
  Rational norm_sq;
};

// Star K_{1,n}: center <prefix>0, ends <prefix>i,j for label i and
// 1 <= j <= m_i. delta[i][j] = +1 when the edge leaves the center.
struct StarSpec {
  std::vector<std::size_t> multiplicities;  // m_1 >= ... >= m_k >= 1
  std::vector<std::vector<int>> delta;
  std::vector<std::string> labels;          // empty: Z1..Zk
  std::string prefix = "v";

  std::size_t k() const noexcept { return multiplicities.size(); }
  std::size_t leaf_count() const noexcept;
  std::string center() const { return prefix + "0"; }
  std::string leaf(std::size_t i, std::size_t j) const;  // zero-based i, j
  std::string label(std::size_t i) const;

  // Throws SpecError.
  void validate() const;

  // Every delta = +1.
  static StarSpec outward(std::vector<std::size_t> multiplicities);
};

LabeledDigraph make_star(const StarSpec& spec);

struct StarPrediction {
  std::size_t abelian_dim = 0;
  std::vector<NamedVector> abelian_basis;   // the set A
  std::vector<NamedOrthogonal> center_perp; // the set S, unnormalized
};

StarPrediction predict_star(const StarSpec& spec);

// Spec 2 is drawn with its own prefix; labels may be shared between the two.
LabeledDigraph make_double_star(const StarSpec& spec1, const StarSpec& spec2,
                                const std::string& bridge_label, int bridge_dir);

struct DoubleStarPrediction {
  std::size_t abelian_dim = 0;
  std::vector<NamedVector> abelian_basis;
};

DoubleStarPrediction predict_double_star(const StarSpec& spec1, const StarSpec& spec2);

// Cycle on v1..vn; edge i joins v_i and v_{i+1} (v_n and v_1 for i = n)
// and runs v_i -> v_{i+1} when orientation[i] = +1.
struct CycleSpec {
  std::size_t n = 0;
  std::vector<int> orientation;
  std::vector<std::string> labels;

  void validate() const;
  std::size_t opposite_count() const;
  static CycleSpec standard(std::vector<std::string> labels);
  static CycleSpec single_label(std::vector<int> orientation, const std::string& label = "Z1");
};

LabeledDigraph make_cycle(const CycleSpec& spec);

struct CyclePrediction {
  std::size_t abelian_dim = 0;
  std::vector<NamedVector> abelian_basis;
};

// Constant-label cycles. Each orbit of j -> j+2 carries the coefficient
// recurrence a_{j+2} = delta_j delta_{j+1} a_j; an orbit whose product of
// signs closes to +1 contributes one basis vector.
CyclePrediction predict_cycle_single_label(const CycleSpec& spec);

struct MultiLabelCyclePrediction {
  bool nontrivial = false;
  std::optional<NamedVector> witness;
  std::vector<std::size_t> run_lengths;  // maximal same-label runs, cyclic
  std::size_t long_paths = 0;            // runs of length >= 2
  bool shortcut_trivial = false;         // at most one run of length >= 2
};

// Standard orientation with at least two labels. Throws SpecError otherwise.
MultiLabelCyclePrediction predict_cycle_multi_label(const CycleSpec& spec);

// v1 .. vn with constant label; directions[i] = +1 for v_{i+1} -> v_{i+2}.
LabeledDigraph make_path(std::size_t n, const std::string& label = "Z1",
                         std::vector<int> directions = {});

struct PathPrediction {
  std::size_t abelian_dim = 0;  // 1 for odd n, 0 for even n
  std::vector<NamedVector> abelian_basis;
};

// Interior vertices force a_{i-1} = +-a_{i+1}; the two ends force a_2 and
// a_{n-1} to vanish.
PathPrediction predict_path(std::size_t n, std::vector<int> directions = {});

// K_{1,k} with edge i carrying squared weight m_i.
struct WeightedStar {
  std::size_t k = 0;
  std::vector<Rational> weights;
};

struct ReducedStar {
  WeightedStar star;
  // det(x I - B) as polynomials in a_1..a_k: x^{k-1} (x^2 + sum m_l a_l^2).
  std::vector<Polynomial> predicted_char_poly;
};

ReducedStar reduce_star(const StarSpec& spec);

// j(sum a_i Z_i) on the weighted star in the basis (center, s_1, ..., s_k)
// where s_i has squared norm m_i.
RatMatrix weighted_star_operator(const WeightedStar& star, const std::vector<Rational>& a);

}  // namespace nilgraph
