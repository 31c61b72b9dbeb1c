#include <gtest/gtest.h>

#include "nilgraph/algebra.hpp"
#include "nilgraph/error.hpp"
#include "nilgraph/families.hpp"
#include "oracles.hpp"

using namespace nilgraph;

namespace {

Subspace span_named(const LabeledDigraph& g, const std::vector<NamedVector>& vs) {
  std::vector<RatRow> rows;
  for (const auto& v : vs) rows.push_back(to_row(g, v));
  return Subspace::span_of(Subspace::Ambient::Vertex, g.vertex_count(), rows);
}

StarSpec star321() {
  StarSpec s;
  s.multiplicities = {3, 2, 1};
  s.delta = {{1, -1, 1}, {1, -1}, {1}};
  return s;
}

}  // namespace

TEST(StarSpec, Validation) {
  EXPECT_NO_THROW(star321().validate());
  auto s = star321();
  s.multiplicities = {1, 2};
  s.delta = {{1}, {1, 1}};
  EXPECT_THROW(s.validate(), SpecError);  // not non-increasing
  s = star321();
  s.delta[0][1] = 0;
  EXPECT_THROW(s.validate(), SpecError);
  EXPECT_EQ(star321().leaf(1, 0), "v2,1");
  EXPECT_EQ(star321().leaf_count(), 6u);
}

TEST(Star, MatchesFixtureAndPrediction) {
  const auto spec = star321();
  const auto g = make_star(spec);
  const auto fixture = fixtures::graph("star_321.graph");
  EXPECT_EQ(g.vertices(), fixture.vertices());
  EXPECT_EQ(g.edges(), fixture.edges());

  const auto p = predict_star(spec);
  EXPECT_EQ(p.abelian_dim, 3u);
  EXPECT_EQ(abelian_factor(NilAlgebra::build(g)), span_named(g, p.abelian_basis));
  ASSERT_EQ(p.center_perp.size(), 4u);
  EXPECT_EQ(p.center_perp[0].norm_sq, 1);
  EXPECT_EQ(p.center_perp[1].norm_sq, 3);
  EXPECT_EQ(p.center_perp[2].norm_sq, 2);
  EXPECT_EQ(p.center_perp[3].norm_sq, 1);
}

TEST(Star, ReducedCharPolyAgreesWithWeightedOperator) {
  const auto r = reduce_star(star321());
  EXPECT_EQ(r.star.k, 3u);
  EXPECT_EQ(r.star.weights, (std::vector<Rational>{3, 2, 1}));
  const std::vector<Rational> a{2, -1, 3};
  const auto m = weighted_star_operator(r.star, a);
  const auto cp = berkowitz(oracle::dense(m));
  ASSERT_EQ(cp.size(), r.predicted_char_poly.size());
  for (std::size_t i = 0; i < cp.size(); ++i) EXPECT_EQ(r.predicted_char_poly[i].evaluate(a), cp[i]) << i;
  // x^2 (x^2 + 3*4 + 2*1 + 1*9)
  EXPECT_EQ(cp[2], 23);
  EXPECT_EQ(cp[4], 1);
}

TEST(DoubleStar, FixtureAndUnion) {
  StarSpec s1;
  s1.multiplicities = {2, 2};
  s1.delta = {{1, 1}, {1, 1}};
  auto s2 = StarSpec::outward({2});
  s2.prefix = "w";
  const auto g = make_double_star(s1, s2, "Z1", 1);
  const auto fixture = fixtures::graph("double_star.graph");
  EXPECT_EQ(span_named(g, predict_double_star(s1, s2).abelian_basis),
            abelian_factor(NilAlgebra::build(g)));
  EXPECT_EQ(abelian_factor(NilAlgebra::build(fixture)).dim(), 3u);
  EXPECT_EQ(predict_double_star(s1, s2).abelian_dim, 3u);
  auto same_prefix = s2;
  same_prefix.prefix = "v";
  EXPECT_THROW(make_double_star(s1, same_prefix, "Z1", 1), SpecError);
}

TEST(Cycle, SingleLabelTrichotomy) {
  // C4 standard: two orbits closing with +1, dim 2. One reversal: dim 0.
  const auto std4 = CycleSpec::single_label({1, 1, 1, 1});
  const auto p = predict_cycle_single_label(std4);
  EXPECT_EQ(p.abelian_dim, 2u);
  const auto g = make_cycle(std4);
  EXPECT_EQ(span_named(g, p.abelian_basis), abelian_factor(NilAlgebra::build(g)));
  EXPECT_EQ(predict_cycle_single_label(CycleSpec::single_label({1, 1, 1, -1})).abelian_dim, 0u);
  // Odd n: a single orbit.
  for (const auto& o : std::vector<std::vector<int>>{{1, 1, 1}, {1, -1, 1, 1, 1}, {-1, -1, 1, 1, 1}}) {
    const auto spec = CycleSpec::single_label(o);
    const auto pred = predict_cycle_single_label(spec);
    const auto h = make_cycle(spec);
    EXPECT_EQ(span_named(h, pred.abelian_basis), abelian_factor(NilAlgebra::build(h)));
  }
}

TEST(Cycle, MultiLabelRuns) {
  // Z1 Z1 Z2 Z2: two runs of length 2, nontrivial.
  const auto spec = CycleSpec::standard({"Z1", "Z1", "Z2", "Z2"});
  const auto p = predict_cycle_multi_label(spec);
  EXPECT_TRUE(p.nontrivial);
  EXPECT_EQ(p.run_lengths, (std::vector<std::size_t>{2, 2}));
  const auto g = make_cycle(spec);
  ASSERT_TRUE(p.witness.has_value());
  EXPECT_TRUE(abelian_factor(NilAlgebra::build(g)).contains(to_row(g, *p.witness)));

  // C8 uniform coloring: all runs length 1.
  const auto c8 = predict_cycle_multi_label(CycleSpec::standard({"Z1", "Z2", "Z3", "Z4", "Z1", "Z2", "Z3", "Z4"}));
  EXPECT_FALSE(c8.nontrivial);
  EXPECT_TRUE(c8.shortcut_trivial);
  EXPECT_EQ(abelian_factor(NilAlgebra::build(fixtures::graph("c8_uniform_482.graph"))).dim(), 0u);

  EXPECT_THROW(predict_cycle_multi_label(CycleSpec::standard({"Z1", "Z1", "Z1"})), SpecError);
}

TEST(Path, ParityOfLength) {
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto g = make_path(n);
    const auto p = predict_path(n);
    EXPECT_EQ(p.abelian_dim, n % 2);
    EXPECT_EQ(span_named(g, p.abelian_basis), abelian_factor(NilAlgebra::build(g))) << n;
  }
  const std::vector<int> dirs{1, -1, -1, 1};
  const auto g = make_path(5, "Z1", dirs);
  EXPECT_EQ(span_named(g, predict_path(5, dirs).abelian_basis), abelian_factor(NilAlgebra::build(g)));
}
