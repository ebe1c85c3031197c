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

const oracle::Density two_step{{0, 1, 2}, {1, 2}};

}  // namespace

TEST(IntervalRegrader, CounterexampleValues) {
  const auto r = two_step_regrader();
  EXPECT_EQ(r.sigma(iv(0, 1)), Rank(0));
  EXPECT_EQ(r.sigma(iv(0, rational(5, 4))), Rank(rational(1, 4)));
  EXPECT_EQ(r.sigma(iv(0, rational(3, 2))), Rank(rational(1, 2)));
  EXPECT_EQ(r.sigma(iv(0, 2)), Rank(1));
  EXPECT_EQ(r.sigma(iv(1, 2)), Rank(rational(1, 2)));
  EXPECT_EQ(r.sigma(IntervalSet{}), Rank(-1));
  EXPECT_EQ(sigma_rank_modular_defect(r, iv(0, 1), iv(1, 2)), Rank(rational(-1, 2)));
}

TEST(IntervalRegrader, ProjectionOfUpperHalf) {
  const auto r = two_step_regrader();
  const auto p = r.project(iv(1, 2));
  EXPECT_EQ(p.side, Side::meet);
  EXPECT_EQ(p.lambda_star, Rank(rational(3, 2)));
  EXPECT_EQ(p.alpha, iv(1, rational(3, 2)));
  const auto q = r.project(iv(0, rational(1, 2)));
  EXPECT_EQ(q.side, Side::join);
  EXPECT_EQ(q.alpha, iv(0, 1));
}

TEST(IntervalRegrader, SigmaMatchesMassWalk) {
  const auto r = two_step_regrader();
  Sampler s(21);
  for (int i = 0; i < 400; ++i) {
    const auto z = s.interval_set(2, 5);
    EXPECT_EQ(r.sigma(z), Rank(oracle::sigma(pieces(z), two_step, 1))) << format(z);
  }
}

TEST(IntervalRegrader, OtherDensityAndLevel) {
  const StepDensity f({0, rational(1, 2), rational(3, 2), 3}, {3, rational(1, 2), 2});
  const oracle::Density of{{0, rational(1, 2), rational(3, 2), 3}, {3, rational(1, 2), 2}};
  const IntervalRegrader r(IntervalLattice::bounded(3), {f, rational(7, 3)});
  Sampler s(8);
  for (int i = 0; i < 200; ++i) {
    const auto z = s.interval_set(3, 5);
    EXPECT_EQ(r.sigma(z), Rank(oracle::sigma(pieces(z), of, rational(7, 3)))) << format(z);
  }
}

TEST(IntervalRegrader, LevelSetIsZeroSet) {
  const auto r = two_step_regrader();
  Sampler s(1);
  for (int i = 0; i < 100; ++i) {
    const auto a = s.level_set_member(two_step_density(), 1);
    EXPECT_TRUE(r.in_cutset(a));
    EXPECT_EQ(r.sigma(a), Rank(0));
    EXPECT_EQ(r.project(a).alpha, a);
  }
}

TEST(IntervalRegrader, RejectsBadCutsets) {
  const auto l = IntervalLattice::bounded(2);
  EXPECT_THROW(IntervalRegrader(l, {two_step_density(), 0}), invalid_cutset);
  EXPECT_THROW(IntervalRegrader(l, {two_step_density(), 3}), invalid_cutset);
  EXPECT_THROW(IntervalRegrader(IntervalLattice::bounded(1), {two_step_density(), 1}), ambient_mismatch);
  EXPECT_THROW(IntervalRegrader(IntervalLattice::unbounded(), {two_step_density(), 1}), precondition_violation);
  EXPECT_THROW(two_step_regrader().sigma(iv(0, 3)), ambient_mismatch);
}

TEST(IntervalRegrader, UniformDensityShiftsRank) {
  const IntervalRegrader r(IntervalLattice::bounded(2), {StepDensity::unit(2), 1});
  Sampler s(2);
  for (int i = 0; i < 100; ++i) {
    const auto z = s.interval_set(2);
    EXPECT_EQ(r.sigma(z), Rank(lebesgue(z) - 1));
  }
}

TEST(IntervalRegrader, Rescale) {
  const auto r = two_step_regrader();
  const RankInterval unit(Rank(0), Rank(1));
  EXPECT_EQ(r.rescaled_sigma(iv(0, 1), unit), Rank(rational(1, 2)));
  EXPECT_EQ(r.rescaled_sigma(iv(0, 2), unit), Rank(1));
  EXPECT_THROW(r.rescaled_sigma(iv(0, 1), RankInterval(Rank(0), Rank::infinity())), precondition_violation);
}

TEST(Table, ChiefAndGoodChains) {
  const auto r = two_step_regrader();
  const auto rows = regrade_table(r, ChainSpec::chief(), rational(1, 4));
  ASSERT_EQ(rows.size(), 9u);
  EXPECT_TRUE(sigma_strictly_increasing(rows));
  EXPECT_EQ(rows.front().sigma, Rank(-1));
  EXPECT_EQ(rows.back().sigma, Rank(1));
  EXPECT_EQ(rows[2].sigma, Rank(rational(-1, 2)));
  const auto seed = IntervalSet::of({{rational(1, 4), rational(3, 4)}, {rational(3, 2), 2}});
  const auto good = regrade_table(r, ChainSpec::good_chain(seed), rational(1, 8));
  EXPECT_TRUE(sigma_strictly_increasing(good));
  for (const auto& row : good) EXPECT_EQ(lebesgue(row.element), row.rho);
  // sigma moves at most max f / min f = 2 per unit of rank
  EXPECT_LE(max_sigma_gap(good), rational(2, 8));
}

TEST(Monotone, RandomPairs) {
  const auto r = two_step_regrader();
  Sampler s(17);
  std::vector<std::pair<IntervalSet, IntervalSet>> pairs;
  for (int i = 0; i < 200; ++i) pairs.push_back(s.strict_pair(2));
  const auto rep = sigma_monotone_check(r, pairs);
  EXPECT_TRUE(rep.pass) << rep.witness.value_or("");
  EXPECT_EQ(rep.checked, 200u);
}

TEST(AlphaOrder, AboveCutset) {
  const auto r = two_step_regrader();
  const auto rep = alpha_order_check(r, iv(1, 2), iv(0, 2));
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.lambda_w, Rank(rational(3, 2)));
  EXPECT_EQ(rep.lambda_z, Rank(1));
  EXPECT_THROW(alpha_order_check(r, iv(0, rational(1, 2)), iv(0, 2)), precondition_violation);
}

TEST(GoodChain, IntervalMaximality) {
  const auto l = IntervalLattice::bounded(2);
  Sampler s(6);
  for (int i = 0; i < 40; ++i) {
    const auto rep = good_chain_maximality_check(l, s.interval_set(2), two_step_density(), rational(1, 8));
    EXPECT_TRUE(rep.pass) << rep.witness.value_or("");
  }
}

TEST(FiniteRegrader, BooleanMiddleLevel) {
  const BooleanLattice b(3);
  const FiniteRegrader r(b, ExplicitAntichain<BitSubset>{level_set(b, Rank(1))});
  for (const auto& x : b.elements()) EXPECT_EQ(r.sigma(x), Rank(x.cardinality() - 1));
  EXPECT_EQ(r.sigma_bottom(), Rank(-1));
  EXPECT_EQ(r.sigma_top(), Rank(2));
  for (const auto& x : b.elements()) EXPECT_TRUE(good_chain_maximality_check(r, x).pass);
}

TEST(FiniteRegrader, RejectsNonCutsets) {
  const BooleanLattice b(2);
  using A = ExplicitAntichain<BitSubset>;
  EXPECT_THROW(FiniteRegrader(b, A{{BitSubset::of(2, {1})}}), invalid_cutset);
  EXPECT_THROW(FiniteRegrader(b, A{{BitSubset::of(2, {1}), BitSubset::of(2, {1, 2})}}), invalid_cutset);
  EXPECT_THROW(FiniteRegrader(b, A{{}}), invalid_cutset);
}

TEST(FiniteRegrader, MixedLevelAntichainMissesAChain) {
  // {} < {2} < {1,2} < {1,2,3} avoids both {1} and {2,3}
  const BooleanLattice b(3);
  EXPECT_THROW(FiniteRegrader(b, ExplicitAntichain<BitSubset>{{BitSubset::of(3, {1}), BitSubset::of(3, {2, 3})}}),
               invalid_cutset);
}

TEST(FiniteRegrader, TopAsCutset) {
  const BooleanLattice b(3);
  const FiniteRegrader r(b, ExplicitAntichain<BitSubset>{{BitSubset::of(3, {1, 2, 3})}});
  for (const auto& x : b.elements()) EXPECT_EQ(r.sigma(x), Rank(x.cardinality() - 3));
  EXPECT_EQ(r.project(BitSubset::of(3, {2})).side, Side::join);
}

TEST(Crosscheck, BooleanAndPartitions) {
  const auto b = finite_regrading_crosscheck(BooleanLattice(4));
  EXPECT_TRUE(b.pass());
  EXPECT_EQ(b.cutsets.size(), 5u);
  EXPECT_EQ(b.chains, 24u);
  const auto p = finite_regrading_crosscheck(PartitionLattice(4));
  EXPECT_TRUE(p.pass());
  EXPECT_EQ(p.cutsets.size(), 4u);
}

TEST(Reversed, ChainAgainstModularElement) {
  const auto l = IntervalLattice::bounded(2);
  std::vector<IntervalSet> els;
  for (int k = 0; k <= 8; ++k) els.push_back(l.chief_element(rational(k, 4)));
  const auto chain = ChainSample<IntervalSet>::build(l, els);
  const auto m = IntervalSet::of({{rational(1, 3), 1}, {rational(3, 2), 2}});
  EXPECT_TRUE(reversed_chain_check(l, m, chain).pass);
}

TEST(Hypothesis, DemosFlagExpectedConditions) {
  const auto plane = main_ext_hypothesis_check(ProductPlaneLattice{}, product_plane_samples());
  EXPECT_EQ(plane.failing(), (std::vector<std::string>{"sup m ^ c = m", "inf m v c = m"}));
  EXPECT_FALSE(plane.all_hold());
  const auto bdd = main_ext_hypothesis_check(bounded_sets_lattice(), bounded_sets_samples());
  EXPECT_EQ(bdd.failing(), (std::vector<std::string>{"sup m ^ c = m"}));
}

TEST(Hypothesis, BoundedIntervalsAreVacuous) {
  const auto l = IntervalLattice::bounded(1);
  HypothesisSamples<IntervalSet> s;
  for (int k = 0; k <= 4; ++k) {
    s.chain.push_back(IntervalSet::single(rational(k, 4), 1));
    s.chief.push_back(l.chief_element(rational(k, 4)));
  }
  std::reverse(s.chain.begin(), s.chain.end());
  s.anchors = {IntervalSet::single(0, rational(1, 2))};
  s.probes = {IntervalSet::single(rational(1, 4), rational(3, 4))};
  const auto rep = main_ext_hypothesis_check(l, s);
  EXPECT_TRUE(rep.all_hold());
  for (const auto& c : rep.conditions) EXPECT_TRUE(c.vacuous) << c.name;
}
