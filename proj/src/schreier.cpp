#include "nilgraph/schreier.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "nilgraph/error.hpp"

namespace nilgraph {

LabelWord TwoPathSequence::expand() const {
  LabelWord w;
  w.reserve(2 * squares.size());
  for (const auto& letter : squares) {
    w.push_back(letter);
    w.push_back(letter);
  }
  return w;
}

SchreierAction::SchreierAction(const LabeledDigraph& g) : n_(g.vertex_count()) {
  if (!diagnostics(g).schreier) throw NotSchreier();
  const auto none = static_cast<VertexIndex>(-1);
  forward_.assign(g.label_count(), Permutation(n_, none));
  backward_.assign(g.label_count(), Permutation(n_, none));
  for (const auto& e : g.edges()) {
    forward_[e.label][e.tail] = e.head;
    backward_[e.label][e.head] = e.tail;
  }
}

VertexIndex SchreierAction::apply(LabelIndex label, int exponent, VertexIndex v) const {
  if (v >= n_) throw UnknownVertex(std::to_string(v));
  if (label >= forward_.size()) throw UnknownLabel(std::to_string(label));
  if (exponent == 1) return forward_[label][v];
  if (exponent == -1) return backward_[label][v];
  throw std::invalid_argument("exponent must be +1 or -1");
}

VertexIndex SchreierAction::apply(const LabelWord& word, VertexIndex v) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply(it->label, it->exponent, v);
  return v;
}

Permutation SchreierAction::permutation(const LabelWord& word) const {
  Permutation out(n_);
  for (VertexIndex v = 0; v < n_; ++v) out[v] = apply(word, v);
  return out;
}

VertexIndex alpha(const LabeledDigraph& g, LabelIndex label, int exponent, VertexIndex v) {
  return SchreierAction(g).apply(label, exponent, v);
}

Permutation alpha_word(const LabeledDigraph& g, const LabelWord& word) {
  return SchreierAction(g).permutation(word);
}

VertexPartition two_path_classes(const LabeledDigraph& g) {
  const SchreierAction action(g);
  const std::size_t n = g.vertex_count();
  std::vector<VertexIndex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexIndex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // Orbits under a generating set are unions along each generator's
  // v -> g(v) pairs. The inverse squares give the same pairs reversed.
  for (LabelIndex l = 0; l < g.label_count(); ++l) {
    const auto& f = action.forward(l);
    for (VertexIndex v = 0; v < n; ++v) {
      auto a = find(v), b = find(f[f[v]]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  VertexPartition part;
  std::vector<std::size_t> class_of_root(n, static_cast<std::size_t>(-1));
  for (VertexIndex v = 0; v < n; ++v) {
    const auto root = find(v);
    if (class_of_root[root] == static_cast<std::size_t>(-1)) {
      class_of_root[root] = part.classes.size();
      part.classes.emplace_back();
      part.representatives.push_back(v);
    }
    part.classes[class_of_root[root]].push_back(v);
  }
  return part;
}

std::vector<RatRow> xi_basis(const LabeledDigraph& g) {
  const auto part = two_path_classes(g);
  std::vector<RatRow> out;
  for (const auto& cls : part.classes) {
    RatRow xi(g.vertex_count());
    for (auto v : cls) xi[v] = 1;
    out.push_back(std::move(xi));
  }
  return out;
}

RatMatrix j_via_action(const LabeledDigraph& g, LabelIndex label) {
  const SchreierAction action(g);
  const std::size_t n = g.vertex_count();
  RatMatrix m(n, n);
  for (VertexIndex v = 0; v < n; ++v) {
    m(action.apply(label, 1, v), v) += 1;
    m(action.apply(label, -1, v), v) -= 1;
  }
  return m;
}

LabeledDigraph schreier_from_permutations(const std::vector<std::string>& labels,
                                          const std::vector<Permutation>& perms,
                                          std::vector<std::string> vertex_names) {
  if (labels.size() != perms.size()) throw SpecError("one permutation per label required");
  const std::size_t n = perms.empty() ? vertex_names.size() : perms.front().size();
  if (vertex_names.empty()) {
    for (std::size_t i = 0; i < n; ++i) vertex_names.push_back("v" + std::to_string(i + 1));
  }
  if (vertex_names.size() != n) throw SpecError("vertex name count mismatch");
  GraphFlags flags;
  flags.nonsimple = true;
  LabeledDigraph::Builder b(flags);
  for (const auto& name : vertex_names) b.add_vertex(name);
  for (std::size_t l = 0; l < labels.size(); ++l) {
    const auto& p = perms[l];
    std::vector<bool> hit(n, false);
    if (p.size() != n) throw SpecError("permutation length mismatch");
    for (std::size_t v = 0; v < n; ++v) {
      if (p[v] >= n || hit[p[v]]) throw SpecError("label " + labels[l] + " is not a permutation");
      hit[p[v]] = true;
      b.add_edge(vertex_names[v], vertex_names[p[v]], labels[l]);
    }
  }
  return b.build();
}

}  // namespace nilgraph
