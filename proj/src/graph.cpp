#include "nilgraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "nilgraph/error.hpp"

namespace nilgraph {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && !(line[j] == ' ' || line[j] == '\t' || line[j] == '\r')) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

// Union-find connectivity over undirected edges.
bool connected(std::size_t n, const std::vector<Edge>& edges) {
  if (n <= 1) return true;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const auto& e : edges) {
    auto a = find(e.tail), b = find(e.head);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace

bool is_valid_token(std::string_view token) {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(), [](char ch) {
    return (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') ||
           ch == '_' || ch == '.' || ch == ',' || ch == '-';
  });
}

LabeledDigraph::Builder& LabeledDigraph::Builder::add_vertex(const std::string& name) {
  if (!is_valid_token(name)) throw ValidationError("invalid vertex name '" + name + "'");
  if (vertex_index_.count(name) != 0) throw ValidationError("vertex '" + name + "' declared twice");
  vertex_index_.emplace(name, vertices_.size());
  vertices_.push_back(name);
  return *this;
}

bool LabeledDigraph::Builder::has_vertex(const std::string& name) const {
  return vertex_index_.count(name) != 0;
}

LabeledDigraph::Builder& LabeledDigraph::Builder::add_edge(const std::string& tail,
                                                           const std::string& head,
                                                           const std::string& label) {
  if (!is_valid_token(label)) throw ValidationError("invalid label '" + label + "'");
  for (const auto* name : {&tail, &head}) {
    if (!has_vertex(*name)) add_vertex(*name);
  }
  auto [it, inserted] = label_index_.try_emplace(label, labels_.size());
  if (inserted) labels_.push_back(label);
  Edge e{vertex_index_.at(tail), vertex_index_.at(head), it->second};
  if (std::find(edges_.begin(), edges_.end(), e) != edges_.end()) {
    throw ValidationError("duplicate edge " + tail + " " + head + " " + label);
  }
  edges_.push_back(e);
  return *this;
}

LabeledDigraph LabeledDigraph::Builder::build() const {
  if (vertices_.empty()) throw ValidationError("graph has no vertices");
  if (!flags_.nonsimple) {
    for (const auto& e : edges_) {
      if (e.is_loop()) {
        throw ValidationError("loop at '" + vertices_[e.tail] +
                              "' requires the #nonsimple header");
      }
    }
  }
  if (!flags_.allow_disconnected && !connected(vertices_.size(), edges_)) {
    throw ValidationError("graph is disconnected");
  }
  LabeledDigraph g;
  g.flags_ = flags_;
  g.vertices_ = vertices_;
  g.labels_ = labels_;
  g.edges_ = edges_;
  g.vertex_index_ = vertex_index_;
  g.label_index_ = label_index_;
  return g;
}

VertexIndex LabeledDigraph::vertex_index(std::string_view name) const {
  auto v = find_vertex(name);
  if (!v) throw UnknownVertex(std::string(name));
  return *v;
}

LabelIndex LabeledDigraph::label_index(std::string_view name) const {
  auto l = find_label(name);
  if (!l) throw UnknownLabel(std::string(name));
  return *l;
}

std::optional<VertexIndex> LabeledDigraph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<LabelIndex> LabeledDigraph::find_label(std::string_view name) const {
  auto it = label_index_.find(std::string(name));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

bool LabeledDigraph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

bool LabeledDigraph::is_simple() const {
  std::set<std::pair<VertexIndex, VertexIndex>> seen;
  for (const auto& e : edges_) {
    if (e.is_loop()) return false;
    auto key = std::minmax(e.tail, e.head);
    if (!seen.insert(key).second) return false;
  }
  return true;
}

bool LabeledDigraph::is_connected() const { return connected(vertices_.size(), edges_); }

LabeledDigraph parse_graph(std::string_view text, ParseOptions options) {
  struct EdgeLine {
    std::size_t line;
    std::string tail, head, label;
  };
  GraphFlags flags;
  flags.allow_disconnected = options.allow_disconnected;
  std::vector<std::pair<std::size_t, std::string>> declared;
  std::vector<EdgeLine> edge_lines;
  bool content_seen = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto pct = line.find('%'); pct != std::string_view::npos) line = line.substr(0, pct);
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;

    if (tokens[0].front() == '#') {
      if (content_seen) throw ParseError(line_no, "header '" + tokens[0] + "' after content");
      if (tokens.size() != 1) throw ParseError(line_no, "header takes no arguments");
      if (tokens[0] == "#nonsimple") {
        flags.nonsimple = true;
      } else if (tokens[0] == "#allow-disconnected") {
        flags.allow_disconnected = true;
      } else {
        throw ParseError(line_no, "unknown header '" + tokens[0] + "'");
      }
      continue;
    }
    content_seen = true;
    for (const auto& t : tokens) {
      if (!is_valid_token(t)) throw ParseError(line_no, "invalid token '" + t + "'");
    }
    if (tokens.size() == 2 && tokens[0] == "vertex") {
      declared.emplace_back(line_no, tokens[1]);
    } else if (tokens.size() == 3) {
      edge_lines.push_back({line_no, tokens[0], tokens[1], tokens[2]});
    } else {
      throw ParseError(line_no, "expected 'TAIL HEAD LABEL' or 'vertex NAME'");
    }
  }

  LabeledDigraph::Builder builder(flags);
  for (const auto& [line, name] : declared) {
    if (builder.has_vertex(name)) throw ParseError(line, "vertex '" + name + "' declared twice");
    builder.add_vertex(name);
  }
  const bool explicit_vertices = !declared.empty();
  for (const auto& e : edge_lines) {
    if (explicit_vertices) {
      for (const auto* name : {&e.tail, &e.head}) {
        if (!builder.has_vertex(*name)) throw ParseError(e.line, "undeclared vertex '" + *name + "'");
      }
    }
    if (e.tail == e.head && !flags.nonsimple) {
      throw ParseError(e.line, "loop at '" + e.tail + "' requires the #nonsimple header");
    }
    try {
      builder.add_edge(e.tail, e.head, e.label);
    } catch (const ValidationError& err) {
      throw ParseError(e.line, err.what());
    }
  }
  return builder.build();
}

std::string serialize_graph(const LabeledDigraph& g) {
  std::ostringstream os;
  if (g.flags().nonsimple) os << "#nonsimple\n";
  if (g.flags().allow_disconnected) os << "#allow-disconnected\n";
  for (const auto& v : g.vertices()) os << "vertex " << v << '\n';
  for (const auto& e : g.edges()) {
    os << g.vertex_name(e.tail) << ' ' << g.vertex_name(e.head) << ' ' << g.label_name(e.label)
       << '\n';
  }
  return os.str();
}

std::string to_dot(const LabeledDigraph& g) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (const auto& v : g.vertices()) os << "  \"" << v << "\";\n";
  for (const auto& e : g.edges()) {
    os << "  \"" << g.vertex_name(e.tail) << "\" -> \"" << g.vertex_name(e.head)
       << "\" [label=\"" << g.label_name(e.label) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

GraphDiagnostics diagnostics(const LabeledDigraph& g) {
  GraphDiagnostics d;
  d.connected = g.is_connected();
  d.simple = g.is_simple();
  d.degree.assign(g.vertex_count(), 0);
  const std::size_t n = g.vertex_count(), p = g.label_count();
  std::vector<std::size_t> out(n * p, 0), in(n * p, 0);
  for (const auto& e : g.edges()) {
    ++d.degree[e.tail];
    ++d.degree[e.head];
    ++out[e.tail * p + e.label];
    ++in[e.head * p + e.label];
  }
  d.max_degree = d.degree.empty() ? 0 : *std::max_element(d.degree.begin(), d.degree.end());
  d.schreier = std::all_of(out.begin(), out.end(), [](auto c) { return c == 1; }) &&
               std::all_of(in.begin(), in.end(), [](auto c) { return c == 1; });
  return d;
}

std::vector<VertexIndex> neighborhood(const LabeledDigraph& g, VertexIndex v) {
  if (v >= g.vertex_count()) throw UnknownVertex(std::to_string(v));
  std::set<VertexIndex> out;
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    if (e.tail == v) out.insert(e.head);
    if (e.head == v) out.insert(e.tail);
  }
  return {out.begin(), out.end()};
}

std::vector<VertexIndex> z_neighborhood(const LabeledDigraph& g, VertexIndex v, LabelIndex label) {
  if (v >= g.vertex_count()) throw UnknownVertex(std::to_string(v));
  if (label >= g.label_count()) throw UnknownLabel(std::to_string(label));
  std::set<VertexIndex> out;
  for (const auto& e : g.edges()) {
    if (e.is_loop() || e.label != label) continue;
    if (e.tail == v) out.insert(e.head);
    if (e.head == v) out.insert(e.tail);
  }
  return {out.begin(), out.end()};
}

std::size_t edge_label_degree(const LabeledDigraph& g, VertexIndex v, LabelIndex label) {
  return z_neighborhood(g, v, label).size();
}

std::vector<VertexIndex> script_a(const LabeledDigraph& g) {
  if (!g.is_simple()) throw NonSimpleGraph("script_a");
  const std::size_t n = g.vertex_count(), p = g.label_count();
  std::vector<std::size_t> label_degree(n * p, 0);
  for (const auto& e : g.edges()) {
    ++label_degree[e.tail * p + e.label];
    ++label_degree[e.head * p + e.label];
  }
  std::vector<bool> member(n, true);
  for (const auto& e : g.edges()) {
    // Each edge vy excludes v when y has degree 1 in the label of vy, and
    // symmetrically for y.
    if (label_degree[e.head * p + e.label] <= 1) member[e.tail] = false;
    if (label_degree[e.tail * p + e.label] <= 1) member[e.head] = false;
  }
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < n; ++v)
    if (member[v]) out.push_back(v);
  return out;
}

bool is_proper_coloring(const LabeledDigraph& g) {
  if (!g.is_simple()) throw NonSimpleGraph("is_proper_coloring");
  const std::size_t p = g.label_count();
  std::vector<std::size_t> label_degree(g.vertex_count() * p, 0);
  for (const auto& e : g.edges()) {
    if (++label_degree[e.tail * p + e.label] > 1) return false;
    if (++label_degree[e.head * p + e.label] > 1) return false;
  }
  return true;
}

std::optional<UniformColoring> uniform_coloring_check(const LabeledDigraph& g) {
  if (!g.is_simple() || !is_proper_coloring(g)) return std::nullopt;
  const auto d = diagnostics(g);
  if (d.degree.empty() || d.max_degree == 0) return std::nullopt;
  if (!std::all_of(d.degree.begin(), d.degree.end(), [&](auto x) { return x == d.max_degree; })) {
    return std::nullopt;
  }
  std::vector<std::size_t> uses(g.label_count(), 0);
  for (const auto& e : g.edges()) ++uses[e.label];
  if (!std::all_of(uses.begin(), uses.end(), [&](auto x) { return x == uses.front(); })) {
    return std::nullopt;
  }
  return UniformColoring{g.label_count(), g.vertex_count(), uses.front(), d.max_degree};
}

LabeledDigraph induced_label_subgraph(const LabeledDigraph& g, LabelIndex label) {
  if (label >= g.label_count()) throw UnknownLabel(std::to_string(label));
  GraphFlags flags = g.flags();
  flags.allow_disconnected = true;
  LabeledDigraph::Builder b(flags);
  std::vector<bool> used(g.vertex_count(), false);
  for (const auto& e : g.edges()) {
    if (e.label == label) used[e.tail] = used[e.head] = true;
  }
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (used[v]) b.add_vertex(g.vertex_name(v));
  for (const auto& e : g.edges()) {
    if (e.label == label) b.add_edge(g.vertex_name(e.tail), g.vertex_name(e.head), g.label_name(label));
  }
  return b.build();
}

std::vector<SameLabeledPath> same_labeled_paths(const LabeledDigraph& g) {
  if (!g.is_simple()) throw NonSimpleGraph("same_labeled_paths");
  const std::size_t n = g.vertex_count();
  std::vector<SameLabeledPath> out;
  for (LabelIndex label = 0; label < g.label_count(); ++label) {
    std::vector<std::vector<VertexIndex>> adj(n);
    for (const auto& e : g.edges()) {
      if (e.label != label) continue;
      adj[e.tail].push_back(e.head);
      adj[e.head].push_back(e.tail);
    }
    for (VertexIndex v = 0; v < n; ++v) {
      if (adj[v].size() >= 3) {
        throw AmbiguousPath("label " + g.label_name(label) + " branches at vertex " +
                            g.vertex_name(v));
      }
    }
    std::vector<bool> seen(n, false);
    // Walk from each unvisited endpoint; ascending order makes the start
    // the smaller endpoint.
    for (VertexIndex start = 0; start < n; ++start) {
      if (seen[start] || adj[start].size() != 1) continue;
      SameLabeledPath path{label, {start}};
      seen[start] = true;
      VertexIndex prev = start, cur = adj[start][0];
      while (true) {
        path.vertices.push_back(cur);
        seen[cur] = true;
        if (adj[cur].size() == 1) break;
        VertexIndex next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
      }
      out.push_back(std::move(path));
    }
    for (VertexIndex v = 0; v < n; ++v) {
      if (!seen[v] && !adj[v].empty()) {
        throw AmbiguousPath("label " + g.label_name(label) + " forms a cycle through vertex " +
                            g.vertex_name(v));
      }
    }
  }
  return out;
}

}  // namespace nilgraph
