#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rgl/rgl.hpp"

using namespace rgl;

namespace {

IntervalSet iv(const Rational& a, const Rational& b) { return IntervalSet::single(a, b); }

oracle::Pieces pieces(const IntervalSet& u) {
  oracle::Pieces out;
  for (const auto& p : u.intervals()) out.push_back({p.lo, p.hi});
  return out;
}

}  // namespace

TEST(IntervalSet, NormalizeMergesTouchingPieces) {
  const auto u = IntervalSet::normalize({{1, 2}, {0, 1}, {rational(3, 2), 3}, {5, 6}});
  ASSERT_EQ(u.intervals().size(), 2u);
  EXPECT_EQ(u, IntervalSet::of({{0, 3}, {5, 6}}));
  EXPECT_TRUE(u.is_canonical());
  EXPECT_EQ(format(u), "(0/1,3/1] u (5/1,6/1]");
  EXPECT_EQ(format(IntervalSet{}), "{}");
}

TEST(IntervalSet, BooleanOperations) {
  const auto a = IntervalSet::of({{0, 2}, {3, 4}});
  const auto b = IntervalSet::of({{1, 3}});
  EXPECT_EQ(intersect(a, b), iv(1, 2));
  EXPECT_EQ(unite(a, b), iv(0, 4));
  EXPECT_EQ(difference(a, b), IntervalSet::of({{0, 1}, {3, 4}}));
  EXPECT_EQ(lebesgue(a), 3);
}

TEST(IntervalSet, SetAlgebraAgainstMeasures) {
  Sampler s(11);
  for (int i = 0; i < 300; ++i) {
    const auto a = s.interval_set(3), b = s.interval_set(3);
    const auto la = oracle::length(pieces(a)), lb = oracle::length(pieces(b));
    EXPECT_EQ(lebesgue(unite(a, b)) + lebesgue(intersect(a, b)), la + lb);
    EXPECT_EQ(lebesgue(difference(a, b)), la - lebesgue(intersect(a, b)));
  }
}

TEST(IntervalLattice, ComplementAndContainment) {
  const auto l = IntervalLattice::bounded(2);
  EXPECT_EQ(l.complement(IntervalSet::of({{rational(1, 2), 1}})), IntervalSet::of({{0, rational(1, 2)}, {1, 2}}));
  EXPECT_FALSE(l.contains(iv(1, 3)));
  EXPECT_THROW(l.complement(iv(1, 3)), ambient_mismatch);
  EXPECT_THROW(IntervalLattice::unbounded().complement(iv(0, 1)), ambient_mismatch);
  for (const auto& u : {IntervalSet{}, iv(0, 2), IntervalSet::of({{0, rational(1, 3)}, {rational(2, 3), 1}})})
    EXPECT_EQ(oracle::complement(pieces(u), 2), pieces(l.complement(u)));
}

TEST(IntervalLattice, ChiefElements) {
  const auto b = IntervalLattice::bounded(2);
  EXPECT_EQ(b.chief_element(rational(3, 2)), iv(0, rational(3, 2)));
  EXPECT_THROW(b.chief_element(3), precondition_violation);
  const auto u = IntervalLattice::unbounded();
  EXPECT_EQ(u.chief_element(2), iv(-1, 1));
  EXPECT_FALSE(u.top().has_value());
  EXPECT_EQ(u.rank(u.chief_element(5)), Rank(5));
}

TEST(StepDensity, MeasureMatchesOracle) {
  const StepDensity f({0, 1, 2}, {1, 2});
  EXPECT_EQ(f.nu(iv(1, rational(3, 2))), 1);
  EXPECT_EQ(f.total(), 3);
  EXPECT_EQ(f.cumulative(rational(3, 2)), 2);
  EXPECT_EQ(f.inverse_cumulative(2), rational(3, 2));
  const oracle::Density of{{0, 1, 2}, {1, 2}};
  Sampler s(3);
  for (int i = 0; i < 300; ++i) {
    const auto u = s.interval_set(2);
    EXPECT_EQ(f.nu(u), oracle::mass(pieces(u), of));
  }
}

TEST(StepDensity, RejectsMalformed) {
  EXPECT_THROW(StepDensity({0, 1}, {1, 2}), precondition_violation);
  EXPECT_THROW(StepDensity({1, 2}, {1}), precondition_violation);
  EXPECT_THROW(StepDensity({0, 1, 1}, {1, 1}), precondition_violation);
  EXPECT_THROW(StepDensity({0, 1}, {0}), precondition_violation);
}

TEST(Profile, MeetAndJoinUnderTwoStepDensity) {
  const auto l = IntervalLattice::bounded(2);
  const StepDensity f({0, 1, 2}, {1, 2});
  const auto z = iv(1, 2);
  const auto meet = meet_profile(l, z, f);
  EXPECT_TRUE(meet.continuous());
  EXPECT_TRUE(meet.weakly_increasing());
  EXPECT_EQ(meet(rational(1, 2)), 0);
  EXPECT_EQ(meet(rational(3, 2)), 1);
  EXPECT_EQ(meet(2), 2);
  EXPECT_EQ(*meet.first_reaching(1), rational(3, 2));
  EXPECT_EQ(*meet.first_reaching(0), 0);
  const auto join = join_profile(l, z, f);
  EXPECT_EQ(join(0), 2);
  EXPECT_EQ(join(rational(1, 2)), rational(5, 2));
  EXPECT_EQ(join(rational(3, 2)), 3);
  EXPECT_EQ(join.lipschitz_constant(), 1);
  EXPECT_FALSE(join.first_reaching(1).has_value());
}

TEST(Profile, ProfilesMatchDirectEvaluation) {
  const auto l = IntervalLattice::bounded(2);
  const StepDensity f({0, rational(1, 2), 2}, {3, rational(1, 2)});
  const oracle::Density of{{0, rational(1, 2), 2}, {3, rational(1, 2)}};
  Sampler s(5);
  for (int i = 0; i < 100; ++i) {
    const auto z = s.interval_set(2);
    const auto mp = meet_profile(l, z, f), jp = join_profile(l, z, f);
    for (int k = 0; k <= 16; ++k) {
      const Rational lam = rational(k, 8);
      const auto chief = l.chief_element(lam);
      EXPECT_EQ(mp(lam), oracle::mass(pieces(intersect(z, chief)), of));
      EXPECT_EQ(jp(lam), oracle::mass(pieces(unite(z, chief)), of));
    }
  }
}

TEST(BoundedChain, ScansSeparate) {
  const auto rep = bounded_chain_demo({1, 10, 100}, {1, 2, 4});
  EXPECT_EQ(rep.chain_sup, Rank(0));
  EXPECT_TRUE(rep.chief_reaches_target());
  EXPECT_FALSE(rep.chain_reaches_target());
}
