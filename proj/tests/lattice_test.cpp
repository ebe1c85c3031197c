#include <gtest/gtest.h>

#include "rgl/rgl.hpp"

using namespace rgl;

namespace {

IntervalSet iv(int a, int b, int den = 1) { return IntervalSet::single(rational(a, den), rational(b, den)); }

SetPartition part(std::vector<std::vector<int>> blocks) { return SetPartition::from_blocks(4, blocks); }

}  // namespace

TEST(Order, DerivedFromMeet) {
  const BooleanLattice b(3);
  const auto x = BitSubset::of(3, {1}), y = BitSubset::of(3, {1, 2}), z = BitSubset::of(3, {3});
  EXPECT_TRUE(leq(b, x, y));
  EXPECT_TRUE(less(b, x, y));
  EXPECT_FALSE(less(b, x, x));
  EXPECT_FALSE(comparable(b, y, z));
  EXPECT_EQ(apply(b, Side::join, x, z), BitSubset::of(3, {1, 3}));
  EXPECT_EQ(apply(b, Side::meet, y, x), x);
}

TEST(RankModular, PartitionDefect) {
  const PartitionLattice pi(4);
  const auto a = part({{1, 2}, {3, 4}}), b = part({{1, 3}, {2, 4}});
  // join is the full partition (rank 3), meet is discrete (rank 0), each has rank 2
  EXPECT_EQ(rank_modular_defect(pi, a, b), Rank(-1));
  EXPECT_EQ(rank_modular_defect(pi, a, pi.join(a, b)), Rank(0));
}

TEST(RankModular, BooleanAlwaysZero) {
  const BooleanLattice b(3);
  const auto xs = b.elements();
  for (const auto& m : xs) EXPECT_TRUE(rank_modular_against(b, m, xs));
}

TEST(Balance, IntervalResidualsVanish) {
  const auto l = IntervalLattice::bounded(2);
  const auto r = rm_balance_residuals(l, iv(0, 3, 2), iv(0, 1, 2), iv(1, 5, 4), IntervalSet::of({{rational(1, 4), rational(3, 2)}, {rational(7, 4), 2}}));
  EXPECT_TRUE(r.zero());
}

TEST(Diamond, BoundsHoldAndBalance) {
  const PartitionLattice pi(4);
  const auto m = part({{1, 2, 3}, {4}}), m2 = part({{1, 2}, {3}, {4}});
  const auto w = part({{1}, {2}, {3, 4}}), z = part({{1, 2}, {3, 4}});
  const auto d = diamond_bounds_check(pi, m, m2, w, z);
  EXPECT_TRUE(d.all_hold());
  EXPECT_TRUE(d.rows_balanced());
  for (const auto& row : d.rows)
    for (const auto& b : row) EXPECT_GE(b.slack(), Rank(0));
}

TEST(Balance, RejectsUnorderedArguments) {
  const auto l = IntervalLattice::bounded(1);
  EXPECT_THROW(rm_balance_residuals(l, iv(0, 1, 2), iv(0, 1), iv(0, 1, 2), iv(0, 1)), precondition_violation);
}

TEST(Lipschitz, MeetAndJoinAgainstChain) {
  const auto l = IntervalLattice::bounded(1);
  std::vector<IntervalSet> els;
  for (int k = 0; k <= 8; ++k) els.push_back(l.chief_element(rational(k, 8)));
  const auto chain = ChainSample<IntervalSet>::build(l, els);
  const auto m = IntervalSet::of({{0, rational(1, 4)}, {rational(1, 2), rational(3, 4)}});
  EXPECT_LE(lipschitz_scan(l, chain, m, Side::meet), 1);
  EXPECT_LE(lipschitz_scan(l, chain, m, Side::join), 1);
  EXPECT_EQ(lipschitz_scan(l, chain, l.chief_element(1), Side::meet), 1);
}

TEST(ChainSample, RejectsNonChain) {
  const auto l = IntervalLattice::bounded(1);
  EXPECT_THROW(ChainSample<IntervalSet>::build(l, {iv(0, 1, 2), iv(1, 2, 2)}), precondition_violation);
}

TEST(UpDown, Distance) {
  const BooleanLattice b(4);
  EXPECT_EQ(updown_distance(b, BitSubset::of(4, {1}), BitSubset::of(4, {2})), Rank(2));
  EXPECT_EQ(updown_metric(b, BitSubset::of(4, {1}), BitSubset::of(4, {2})), Rank(rational(1, 2)));
}

TEST(LeftModular, ModularElementOfPartitions) {
  const PartitionLattice pi(4);
  const auto m = part({{1, 2}, {3}, {4}});
  for (const auto& w : pi.elements())
    for (const auto& z : pi.elements())
      if (leq(pi, w, z)) {
        EXPECT_TRUE(left_modular_at(pi, m, w, z));
      }
}

TEST(LeftModular, FailsForNonModularPartition) {
  const PartitionLattice pi(4);
  const auto m = part({{1, 2}, {3, 4}});
  bool failed = false;
  for (const auto& w : pi.elements())
    for (const auto& z : pi.elements())
      if (leq(pi, w, z)) failed = failed || !left_modular_at(pi, m, w, z);
  EXPECT_TRUE(failed);
}

TEST(Projection, IntoInterval) {
  const auto l = IntervalLattice::bounded(2);
  const auto w = iv(0, 1, 2), z = iv(0, 3, 2), m = iv(1, 2);
  const auto p = project_into_interval(l, m, w, z);
  EXPECT_EQ(p, IntervalSet::of({{0, rational(1, 2)}, {1, rational(3, 2)}}));
  EXPECT_EQ(interval_projection_defect(l, m, w, z, iv(0, 1)), Rank(0));
}

TEST(Laws, NoViolationsInBooleanLattice) {
  const BooleanLattice b(3);
  for (const auto& x : b.elements())
    for (const auto& y : b.elements())
      for (const auto& z : b.elements()) EXPECT_FALSE(lattice_law_violation(b, x, y, z).has_value());
}

TEST(Adjoin, TopOnUnboundedIntervals) {
  const auto l = adjoin_bounds(IntervalLattice::unbounded(), Rank::infinity(), Rank(0));
  const auto top = *l.top();
  const auto x = l.lift(iv(-1, 1));
  EXPECT_EQ(l.rank(top), Rank::infinity());
  EXPECT_EQ(l.meet(top, x), x);
  EXPECT_EQ(l.join(top, x), top);
  EXPECT_EQ(rank_modular_defect(l, top, x), Rank(0));
  EXPECT_THROW(adjoin_bounds(IntervalLattice::bounded(1), Rank(2), Rank(0)), precondition_violation);
}

TEST(Regraded, UsesNewGrading) {
  const BooleanLattice b(2);
  const Regraded g(b, [](const BitSubset& s) { return Rank(2 * s.cardinality()); });
  EXPECT_EQ(g.rank(BitSubset::of(2, {1, 2})), Rank(4));
  EXPECT_EQ(g.meet(BitSubset::of(2, {1}), BitSubset::of(2, {2})), BitSubset::of(2, {}));
}
