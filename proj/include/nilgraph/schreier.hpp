#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nilgraph/graph.hpp"
#include "nilgraph/linalg.hpp"

namespace nilgraph {

struct LabelLetter {
  LabelIndex label;
  int exponent;  // +1 or -1
  bool operator==(const LabelLetter&) const = default;
};

// Product of letters; the rightmost letter acts first.
using LabelWord = std::vector<LabelLetter>;

// (Z_k^{±1})^2 ... (Z_1^{±1})^2, stored left to right.
struct TwoPathSequence {
  std::vector<LabelLetter> squares;
  LabelWord expand() const;
};

using Permutation = std::vector<VertexIndex>;

// The action v -> (head of the Z-edge leaving v) of a Schreier graph.
class SchreierAction {
 public:
  // Throws NotSchreier.
  explicit SchreierAction(const LabeledDigraph& g);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t label_count() const noexcept { return forward_.size(); }

  VertexIndex apply(LabelIndex label, int exponent, VertexIndex v) const;
  VertexIndex apply(const LabelWord& word, VertexIndex v) const;
  Permutation permutation(const LabelWord& word) const;
  const Permutation& forward(LabelIndex label) const { return forward_.at(label); }
  const Permutation& backward(LabelIndex label) const { return backward_.at(label); }

 private:
  std::size_t n_ = 0;
  std::vector<Permutation> forward_;
  std::vector<Permutation> backward_;
};

VertexIndex alpha(const LabeledDigraph& g, LabelIndex label, int exponent, VertexIndex v);
Permutation alpha_word(const LabeledDigraph& g, const LabelWord& word);

struct VertexPartition {
  std::vector<std::vector<VertexIndex>> classes;  // each ascending
  std::vector<VertexIndex> representatives;       // least vertex of each class
  std::size_t beta() const noexcept { return classes.size(); }
};

// Orbits of the group generated by the squares alpha(Z)^2, alpha(Z^-1)^2.
VertexPartition two_path_classes(const LabeledDigraph& g);

// xi_i = sum of the vertices in class i, as vertex-coordinate rows.
std::vector<RatRow> xi_basis(const LabeledDigraph& g);

// Column v holds alpha(Z) v - alpha(Z^-1) v.
RatMatrix j_via_action(const LabeledDigraph& g, LabelIndex label);

// Builds a Schreier graph from one permutation per label (perm[v] is the
// head of the edge leaving v). Vertex names default to v1..vn.
LabeledDigraph schreier_from_permutations(const std::vector<std::string>& labels,
                                          const std::vector<Permutation>& perms,
                                          std::vector<std::string> vertex_names = {});

}  // namespace nilgraph
