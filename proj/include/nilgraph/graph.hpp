#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace nilgraph {

using VertexIndex = std::size_t;
using LabelIndex = std::size_t;

struct Edge {
  VertexIndex tail;
  VertexIndex head;
  LabelIndex label;

  bool is_loop() const noexcept { return tail == head; }
  bool operator==(const Edge&) const = default;
};

struct GraphFlags {
  bool nonsimple = false;           // loops permitted
  bool allow_disconnected = false;  // skip the connectivity check
};

// Directed edge-labeled graph. Vertices keep declaration order and labels
// keep order of first appearance; every matrix and basis in the library is
// indexed in that order. Immutable once built.
class LabeledDigraph {
 public:
  class Builder {
   public:
    explicit Builder(GraphFlags flags = {}) : flags_(flags) {}

    Builder& add_vertex(const std::string& name);
    // Declares missing endpoints on first use.
    Builder& add_edge(const std::string& tail, const std::string& head,
                      const std::string& label);
    bool has_vertex(const std::string& name) const;
    GraphFlags& flags() { return flags_; }

    // Validates duplicates, loops, and connectivity.
    LabeledDigraph build() const;

   private:
    GraphFlags flags_;
    std::vector<std::string> vertices_;
    std::unordered_map<std::string, VertexIndex> vertex_index_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, LabelIndex> label_index_;
    std::vector<Edge> edges_;
  };

  LabeledDigraph() = default;

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t label_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const GraphFlags& flags() const noexcept { return flags_; }

  const std::string& vertex_name(VertexIndex v) const { return vertices_.at(v); }
  const std::string& label_name(LabelIndex l) const { return labels_.at(l); }

  // Throw UnknownVertex / UnknownLabel.
  VertexIndex vertex_index(std::string_view name) const;
  LabelIndex label_index(std::string_view name) const;
  std::optional<VertexIndex> find_vertex(std::string_view name) const;
  std::optional<LabelIndex> find_label(std::string_view name) const;

  bool has_loops() const;
  // No loops and at most one edge per unordered vertex pair.
  bool is_simple() const;
  bool is_connected() const;

 private:
  GraphFlags flags_;
  std::vector<std::string> vertices_;
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, VertexIndex> vertex_index_;
  std::unordered_map<std::string, LabelIndex> label_index_;
};

bool is_valid_token(std::string_view token);

struct ParseOptions {
  bool allow_disconnected = false;
};

// Line-oriented format:
//   #nonsimple / #allow-disconnected   optional header lines
//   TAIL HEAD LABEL                    one edge per line
//   vertex NAME                        explicit declaration
//   % ...                              comment to end of line
// When any `vertex` line is present, the declared set is authoritative and
// edges may only reference declared vertices.
LabeledDigraph parse_graph(std::string_view text, ParseOptions options = {});

// Canonical form: headers, one `vertex` line per vertex in order, then the
// edges in stored order. parse_graph(serialize_graph(g)) reproduces g.
std::string serialize_graph(const LabeledDigraph& g);

std::string to_dot(const LabeledDigraph& g);

struct GraphDiagnostics {
  bool connected = false;
  bool simple = false;
  bool schreier = false;
  std::size_t max_degree = 0;
  std::vector<std::size_t> degree;  // loops count twice
};

GraphDiagnostics diagnostics(const LabeledDigraph& g);

// Undirected adjacency, loops excluded; ascending vertex order.
std::vector<VertexIndex> neighborhood(const LabeledDigraph& g, VertexIndex v);

// Neighbors joined to v by at least one edge carrying `label`.
std::vector<VertexIndex> z_neighborhood(const LabeledDigraph& g, VertexIndex v,
                                        LabelIndex label);

std::size_t edge_label_degree(const LabeledDigraph& g, VertexIndex v, LabelIndex label);

// Vertices v such that every neighbor y sees the label of vy with
// edge-label degree > 1. Simple graphs only (NonSimpleGraph otherwise).
std::vector<VertexIndex> script_a(const LabeledDigraph& g);

bool is_proper_coloring(const LabeledDigraph& g);

struct UniformColoring {
  std::size_t p = 0;  // labels
  std::size_t q = 0;  // vertices
  std::size_t r = 0;  // uses per label
  std::size_t s = 0;  // common vertex degree
  bool operator==(const UniformColoring&) const = default;
};

std::optional<UniformColoring> uniform_coloring_check(const LabeledDigraph& g);

// Subgraph of edges labeled `label` and their endpoints, in original order.
// The result may be disconnected.
LabeledDigraph induced_label_subgraph(const LabeledDigraph& g, LabelIndex label);

struct SameLabeledPath {
  LabelIndex label;
  std::vector<VertexIndex> vertices;  // walk order, starts at the smaller endpoint
  std::size_t length() const noexcept { return vertices.size() - 1; }
};

// Maximal monochromatic paths, grouped by label order. Throws AmbiguousPath
// when a label-induced subgraph branches or closes into a cycle.
std::vector<SameLabeledPath> same_labeled_paths(const LabeledDigraph& g);

}  // namespace nilgraph
