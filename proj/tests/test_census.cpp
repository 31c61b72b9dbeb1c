#include <gtest/gtest.h>

#include "nilgraph/census.hpp"
#include "nilgraph/error.hpp"
#include "nilgraph/report.hpp"
#include "nilgraph/verify.hpp"
#include "oracles.hpp"

using namespace nilgraph;

TEST(Verify, FixturesPass) {
  for (const char* name : {"triangle_multiedge.graph", "c4_standard.graph", "six_vertex_tree.graph",
                           "star_321.graph", "double_star.graph", "bridged_tree.graph",
                           "schreier5.graph", "uniform_363.graph", "c8_uniform_482.graph"}) {
    const auto r = verify_graph(fixtures::graph(name));
    EXPECT_TRUE(r.all_passed()) << name << ": " << testing::PrintToString(r.failures());
  }
  const auto r = verify_graph(fixtures::graph("schreier5.graph"));
  ASSERT_NE(r.find("xi_basis"), nullptr);
  EXPECT_TRUE(r.find("xi_basis")->applicable);
  EXPECT_FALSE(r.find("script_a_containment")->applicable);
}

TEST(Verify, CorruptedTensorIsCaught) {
  // [v1, v2] = Z1 but [v2, v1] = 0.
  std::vector<std::int8_t> s(2 * 2 * 1, 0);
  s[(0 * 2 + 1) * 1 + 0] = 1;
  const auto a = NilAlgebra::from_structure({"v1", "v2"}, {"Z1"}, s);
  const auto r = verify_algebra(a);
  EXPECT_FALSE(r.all_passed());
  EXPECT_FALSE(r.find("skew_symmetry")->passed);
}

TEST(Enumeration, Counts) {
  EXPECT_EQ(multiplicity_vectors(5, 5).size(), 251u);
  EXPECT_EQ(multiplicity_vectors(1, 3).size(), 3u);
  const auto o = all_orientations(3);
  EXPECT_EQ(o.size(), 8u);
  EXPECT_EQ(o.front(), (std::vector<int>{1, 1, 1}));
  // Length 4 over two labels, at least two labels used, up to rotation:
  // necklaces of length 4 over 2 letters (6) minus the 2 constant ones.
  EXPECT_EQ(label_sequences_up_to_rotation(4, 2).size(), 4u);
}

TEST(Census, SmallRunsAgree) {
  for (auto fam : {CensusFamily::SingleLabelCycle, CensusFamily::MultiLabelCycle, CensusFamily::Path,
                   CensusFamily::DoubleStar}) {
    CensusOptions o;
    o.family = fam;
    o.max_n = fam == CensusFamily::DoubleStar ? 2 : 6;
    o.samples = 20;
    const auto r = run_census(o);
    EXPECT_FALSE(r.rows.empty()) << to_string(fam);
    EXPECT_TRUE(r.all_agree()) << to_string(fam);
  }
}

TEST(Census, ThreadCountDoesNotChangeRows) {
  CensusOptions o;
  o.family = CensusFamily::SingleLabelCycle;
  o.max_n = 5;
  o.samples = 10;
  const auto one = run_census(o);
  o.threads = 3;
  const auto three = run_census(o);
  ASSERT_EQ(one.rows.size(), three.rows.size());
  for (std::size_t i = 0; i < one.rows.size(); ++i) EXPECT_EQ(one.rows[i].descriptor, three.rows[i].descriptor);
}

TEST(Census, SizeLimit) {
  CensusOptions o;
  o.family = CensusFamily::SingleLabelCycle;
  o.max_n = 20;
  o.max_rows = 1000;
  EXPECT_THROW(census_tasks(o), CensusTooLarge);
}

TEST(Report, SpecDocuments) {
  const auto g = graph_from_spec(Json::parse(R"({"family":"star","multiplicities":[3,2,1],
      "delta":[[1,-1,1],[1,-1],[1]]})"));
  EXPECT_EQ(g.edges(), fixtures::graph("star_321.graph").edges());
  EXPECT_THROW(graph_from_spec(Json::parse(R"({"family":"wheel"})")), SpecError);
  EXPECT_THROW(graph_from_spec(Json::parse(R"({"family":"star"})")), SpecError);
  const auto info = info_report(fixtures::graph("c4_standard.graph"));
  EXPECT_EQ(info["dims"]["abelian_factor"], 2);
}
