#include <gtest/gtest.h>

#include <functional>

#include "oracles.hpp"
#include "rgl/rgl.hpp"

using namespace rgl;

namespace {

// Maximal chains of Pi_n counted by merging two blocks at a time.
std::size_t partition_chain_count(std::vector<std::vector<int>> blocks) {
  if (blocks.size() <= 1) return 1;
  std::size_t total = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      auto next = blocks;
      next[i].insert(next[i].end(), next[j].begin(), next[j].end());
      next.erase(next.begin() + static_cast<std::ptrdiff_t>(j));
      total += partition_chain_count(next);
    }
  return total;
}

}  // namespace

TEST(Boolean, Basics) {
  const BooleanLattice b(3);
  const auto x = BitSubset::of(3, {1, 3}), y = BitSubset::of(3, {2, 3});
  EXPECT_EQ(b.meet(x, y), BitSubset::of(3, {3}));
  EXPECT_EQ(b.join(x, y), BitSubset::of(3, {1, 2, 3}));
  EXPECT_EQ(b.rank(x), Rank(2));
  EXPECT_EQ(b.elements().size(), 8u);
  EXPECT_EQ(format(x), "{1,3}");
  EXPECT_THROW(BitSubset::of(3, {4}), precondition_violation);
  EXPECT_THROW(BooleanLattice(caps::max_boolean_ground + 1), size_cap_exceeded);
}

TEST(Boolean, MaximalChainsMatchPermutations) {
  for (int n : {2, 3, 4}) {
    const auto chains = enumerate_maximal_chains(BooleanLattice(n));
    const auto want = oracle::boolean_maximal_chains(n);
    ASSERT_EQ(chains.size(), want.size());
    std::set<std::vector<std::uint32_t>> got, expected(want.begin(), want.end());
    for (const auto& c : chains) {
      std::vector<std::uint32_t> masks;
      for (const auto& s : c) masks.push_back(s.mask);
      got.insert(masks);
    }
    EXPECT_EQ(got, expected);
  }
}

TEST(Boolean, CutsetCounts) {
  EXPECT_EQ(antichain_cutsets_exhaustive(BooleanLattice(2)).size(), oracle::boolean_cutset_count(2));
  EXPECT_EQ(antichain_cutsets_exhaustive(BooleanLattice(2)).size(), 3u);
  EXPECT_EQ(antichain_cutsets_exhaustive(BooleanLattice(3)).size(), oracle::boolean_cutset_count(3));
}

TEST(Boolean, EveryElementRankModular) {
  const BooleanLattice b(4);
  EXPECT_EQ(rank_modular_elements(b).size(), 16u);
}

TEST(Partition, MeetJoinRank) {
  const PartitionLattice pi(4);
  const auto a = SetPartition::from_blocks(4, {{1, 2}, {3, 4}});
  const auto b = SetPartition::from_blocks(4, {{1, 3}, {2, 4}});
  EXPECT_EQ(pi.meet(a, b), SetPartition::discrete(4));
  EXPECT_EQ(pi.join(a, b), SetPartition::full(4));
  EXPECT_EQ(pi.rank(a), Rank(2));
  EXPECT_EQ(format(a), "{{1,2},{3,4}}");
}

TEST(Partition, ElementsMatchOracle) {
  for (int n = 1; n <= 5; ++n) {
    const PartitionLattice pi(n);
    const auto got = pi.elements();
    const auto want = oracle::set_partitions(n);
    ASSERT_EQ(got.size(), want.size()) << "n=" << n;
    for (const auto& blocks : want)
      EXPECT_NE(std::find(got.begin(), got.end(), SetPartition::from_blocks(n, blocks)), got.end());
  }
}

TEST(Partition, RankModularCount) {
  const auto mods = rank_modular_elements(PartitionLattice(4));
  EXPECT_EQ(mods.size(), 12u);
  for (const auto& m : mods) EXPECT_LE(m.nontrivial_blocks(), 1);
}

TEST(Partition, MaximalChains) {
  const std::vector<std::vector<int>> discrete{{1}, {2}, {3}, {4}};
  EXPECT_EQ(enumerate_maximal_chains(PartitionLattice(4)).size(), partition_chain_count(discrete));
}

TEST(Partition, RejectsBadBlocks) {
  EXPECT_THROW(SetPartition::from_blocks(3, {{1, 2}}), precondition_violation);
  EXPECT_THROW(SetPartition::from_blocks(3, {{1, 2}, {2, 3}}), precondition_violation);
  EXPECT_THROW(PartitionLattice(caps::max_partition_ground + 1), size_cap_exceeded);
}

TEST(Subspace, SmallLattice) {
  const SubspaceLattice v(2, 2);
  EXPECT_EQ(v.elements().size(), 5u);
  const auto e1 = Subspace::coordinate(2, 2, {1}), e2 = Subspace::coordinate(2, 2, {2});
  EXPECT_EQ(v.join(e1, e2), Subspace::whole(2, 2));
  EXPECT_EQ(v.meet(e1, e2), Subspace::zero(2, 2));
  EXPECT_EQ(v.rank(e1), Rank(1));
  EXPECT_EQ(enumerate_maximal_chains(v).size(), 3u);
  EXPECT_EQ(rank_modular_elements(v).size(), 5u);
}

TEST(Subspace, CountOverF3) {
  // 1 + 13 + 13 + 1 subspaces of F_3^3
  EXPECT_EQ(SubspaceLattice(3, 3).elements().size(), 28u);
}

TEST(Subspace, SpanReduces) {
  const auto s = Subspace::span(2, 3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  EXPECT_EQ(s.dimension(), 2);
  EXPECT_THROW(Subspace::span(4, 2, {}), precondition_violation);
}

TEST(ChiefChain, SaturatedAndModular) {
  const auto bc = chief_chain(BooleanLattice(3));
  ASSERT_EQ(bc.size(), 4u);
  EXPECT_EQ(bc[2].element, BitSubset::of(3, {1, 2}));
  const auto pc = chief_chain(PartitionLattice(4));
  ASSERT_EQ(pc.size(), 4u);
  for (const auto& p : pc) EXPECT_LE(p.element.nontrivial_blocks(), 1);
  EXPECT_EQ(chief_chain(SubspaceLattice(2, 3)).size(), 4u);
}

TEST(LevelSet, ByRank) {
  EXPECT_EQ(level_set(BooleanLattice(4), Rank(2)).size(), 6u);
  EXPECT_EQ(level_set(PartitionLattice(4), Rank(2)).size(), 7u);
}

TEST(Saturated, DetectsGaps) {
  const BooleanLattice b(3);
  EXPECT_TRUE(is_saturated_chain(b, {BitSubset::of(3, {}), BitSubset::of(3, {2}), BitSubset::of(3, {1, 2}), BitSubset::of(3, {1, 2, 3})}));
  EXPECT_FALSE(is_saturated_chain(b, {BitSubset::of(3, {}), BitSubset::of(3, {1, 2}), BitSubset::of(3, {1, 2, 3})}));
}

TEST(FiniteIndex, RefusesLargeLattices) {
  EXPECT_THROW(FiniteIndex<BooleanLattice>(BooleanLattice(11)), size_cap_exceeded);
}

TEST(ProductPlane, OrderAndDemo) {
  const ProductPlaneLattice p;
  const auto x = PlanePoint::at(1, 0), y = PlanePoint::at(0, 1);
  EXPECT_EQ(p.meet(x, y), PlanePoint::at(0, 0));
  EXPECT_EQ(p.join(x, y), PlanePoint::at(1, 1));
  EXPECT_EQ(p.rank(PlanePoint::at(rational(1, 2), 2)), Rank(rational(5, 2)));
  EXPECT_EQ(p.rank(PlanePoint::hat_top()), Rank::infinity());
  EXPECT_EQ(p.meet(PlanePoint::hat_top(), x), x);
  const auto demo = product_plane_limit_demo({1, 2, 4, 8});
  EXPECT_EQ(demo.meet_sup, Rank(0));
  EXPECT_EQ(demo.meet_at_top, Rank(1));
  EXPECT_TRUE(demo.discontinuous_at_neg_inf());
}
