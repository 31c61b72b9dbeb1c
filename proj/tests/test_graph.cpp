#include <gtest/gtest.h>

#include "nilgraph/error.hpp"
#include "nilgraph/graph.hpp"
#include "oracles.hpp"

using namespace nilgraph;

namespace {

std::vector<std::string> names(const LabeledDigraph& g, const std::vector<VertexIndex>& vs) {
  std::vector<std::string> out;
  for (auto v : vs) out.push_back(g.vertex_name(v));
  return out;
}

}  // namespace

TEST(Parse, OrdersVerticesAndLabelsByFirstUse) {
  const auto g = fixtures::graph("triangle_multiedge.graph");
  EXPECT_EQ(g.vertices(), (std::vector<std::string>{"v1", "v2", "v3"}));
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"Z1", "Z2"}));
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_TRUE(g.is_connected());
  EXPECT_FALSE(g.is_simple());  // v2 and v3 are joined twice
}

TEST(Parse, ExplicitVertexDeclarationsFixOrder) {
  const auto g = fixtures::graph("star_321.graph");
  EXPECT_EQ(g.vertex_name(0), "v0");
  EXPECT_EQ(g.vertex_name(6), "v3,1");
  EXPECT_THROW(parse_graph("vertex a\nvertex b\na c Z1\n"), ParseError);
}

TEST(Parse, Errors) {
  try {
    fixtures::graph("malformed.graph");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(fixtures::graph("disconnected.graph"), ValidationError);
  EXPECT_NO_THROW(parse_graph(fixtures::read("disconnected.graph"), {.allow_disconnected = true}));
  EXPECT_THROW(parse_graph("a a Z1\n"), Error);             // loop without #nonsimple
  EXPECT_THROW(parse_graph("a b Z1\na b Z1\n"), ParseError);  // duplicate triple
  EXPECT_NO_THROW(parse_graph("a b Z1\nb a Z2\n"));           // multi-edge, distinct labels
  EXPECT_NO_THROW(parse_graph("#nonsimple\na a Z1\na b Z1\n"));
}

TEST(Parse, RoundTrip) {
  for (const char* name : {"triangle_multiedge.graph", "star_321.graph", "schreier5.graph",
                           "uniform_363.graph", "double_star.graph"}) {
    const auto g = fixtures::graph(name);
    const auto h = parse_graph(serialize_graph(g));
    EXPECT_EQ(h.vertices(), g.vertices()) << name;
    EXPECT_EQ(h.labels(), g.labels()) << name;
    EXPECT_EQ(h.edges(), g.edges()) << name;
    EXPECT_EQ(h.flags().nonsimple, g.flags().nonsimple) << name;
  }
}

TEST(Neighborhoods, DegreesAndLabelNeighbors) {
  const auto g = fixtures::graph("six_vertex_tree.graph");
  const auto v3 = g.vertex_index("v3"), v4 = g.vertex_index("v4");
  EXPECT_EQ(names(g, neighborhood(g, v3)), (std::vector<std::string>{"v1", "v2", "v4"}));
  EXPECT_EQ(names(g, z_neighborhood(g, v3, g.label_index("Z1"))), (std::vector<std::string>{"v1", "v4"}));
  EXPECT_EQ(edge_label_degree(g, v4, g.label_index("Z1")), 2u);
  EXPECT_EQ(edge_label_degree(g, v4, g.label_index("Z2")), 1u);
  EXPECT_THROW(g.label_index("Z9"), UnknownLabel);
}

TEST(ScriptA, WorkedExamples) {
  const auto g1 = fixtures::graph("c4_standard.graph");
  EXPECT_EQ(names(g1, script_a(g1)), (std::vector<std::string>{"v1", "v2", "v3", "v4"}));
  const auto g2 = fixtures::graph("six_vertex_tree.graph");
  EXPECT_EQ(names(g2, script_a(g2)), (std::vector<std::string>{"v1", "v5"}));
  // Direction does not enter the definition.
  const auto g1r = fixtures::graph("c4_one_reversed.graph");
  EXPECT_EQ(script_a(g1r).size(), 4u);
  const auto tree = fixtures::graph("bridged_tree.graph");
  EXPECT_EQ(names(tree, script_a(tree)), (std::vector<std::string>{"v1", "v2", "w0", "u1", "u2"}));
  EXPECT_THROW(script_a(fixtures::graph("schreier5.graph")), NonSimpleGraph);
}

TEST(Coloring, ProperAndUniform) {
  const auto u = fixtures::graph("uniform_363.graph");
  EXPECT_TRUE(is_proper_coloring(u));
  EXPECT_EQ(uniform_coloring_check(u), (UniformColoring{3, 6, 3, 3}));
  const auto c8 = fixtures::graph("c8_uniform_482.graph");
  EXPECT_EQ(uniform_coloring_check(c8), (UniformColoring{4, 8, 2, 2}));
  const auto c4 = fixtures::graph("c4_standard.graph");
  EXPECT_FALSE(is_proper_coloring(c4));
  EXPECT_FALSE(uniform_coloring_check(c4).has_value());
}

TEST(Diagnostics, SchreierDetection) {
  EXPECT_TRUE(diagnostics(fixtures::graph("schreier5.graph")).schreier);
  // One label, every vertex with one in-edge and one out-edge.
  EXPECT_TRUE(diagnostics(fixtures::graph("c4_standard.graph")).schreier);
  EXPECT_FALSE(diagnostics(fixtures::graph("c4_one_reversed.graph")).schreier);
  const auto d = diagnostics(fixtures::graph("star_321.graph"));
  EXPECT_EQ(d.max_degree, 6u);
  EXPECT_TRUE(d.simple);
}

TEST(SameLabeledPaths, SplitsByLabel) {
  const auto g = fixtures::graph("six_vertex_tree.graph");
  const auto paths = same_labeled_paths(g);
  // Z1: v1-v3-v4-v5 ; Z2: v2-v3 and v4-v6
  ASSERT_EQ(paths.size(), 3u);
  EXPECT_EQ(paths[0].length(), 3u);
  EXPECT_EQ(names(g, paths[0].vertices), (std::vector<std::string>{"v1", "v3", "v4", "v5"}));
  EXPECT_EQ(paths[1].length(), 1u);
  EXPECT_EQ(paths[2].length(), 1u);
  EXPECT_THROW(same_labeled_paths(fixtures::graph("c4_standard.graph")), AmbiguousPath);
  EXPECT_THROW(same_labeled_paths(fixtures::graph("star_321.graph")), AmbiguousPath);
}

TEST(InducedSubgraph, KeepsOnlyOneLabel) {
  const auto g = fixtures::graph("uniform_363.graph");
  const auto h = induced_label_subgraph(g, g.label_index("Z2"));
  EXPECT_EQ(h.edge_count(), 3u);
  EXPECT_EQ(h.vertex_count(), 6u);
  EXPECT_FALSE(h.is_connected());
}
