#include <gtest/gtest.h>

#include "rgl/rank.hpp"

using namespace rgl;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/6"), rational(1, 2));
  EXPECT_EQ(parse_rational("-7"), rational(-7));
  EXPECT_EQ(to_string(rational(4, 8)), "1/2");
  EXPECT_EQ(to_string(rational(3)), "3/1");
  EXPECT_THROW(parse_rational("1/0"), parse_error);
  EXPECT_THROW(parse_rational("0.5"), parse_error);
  EXPECT_THROW(parse_rational(""), parse_error);
}

TEST(Rational, LargeValuesStayExact) {
  const auto big = parse_rational("123456789012345678901234567890/7");
  EXPECT_EQ(parse_rational(to_string(big)), big);
  EXPECT_EQ(big * 7 - parse_rational("123456789012345678901234567890"), 0);
}

TEST(Rank, InfiniteArithmetic) {
  const Rank inf = Rank::infinity(), ninf = Rank::neg_infinity();
  EXPECT_EQ(inf + Rank(3), inf);
  EXPECT_EQ(Rank(3) - inf, ninf);
  EXPECT_EQ(-ninf, inf);
  EXPECT_EQ(rational(-2) * inf, ninf);
  EXPECT_THROW(inf + ninf, indeterminate_form);
  EXPECT_THROW(inf - inf, indeterminate_form);
  EXPECT_THROW(rational(0) * inf, indeterminate_form);
  EXPECT_THROW(inf.value(), std::logic_error);
}

TEST(Rank, Ordering) {
  EXPECT_LT(Rank::neg_infinity(), Rank(-1000));
  EXPECT_LT(Rank(rational(1, 3)), Rank(rational(1, 2)));
  EXPECT_LT(Rank(1000), Rank::infinity());
  EXPECT_EQ(Rank::infinity(), Rank::infinity());
  EXPECT_EQ(max(Rank(1), Rank::neg_infinity()), Rank(1));
  EXPECT_EQ(min(Rank(1), Rank::neg_infinity()), Rank::neg_infinity());
}

TEST(Rank, SignAndText) {
  EXPECT_EQ(Rank(rational(-1, 2)).sign(), -1);
  EXPECT_EQ(Rank(0).sign(), 0);
  EXPECT_EQ(Rank::infinity().sign(), 1);
  EXPECT_EQ(Rank::parse("-inf"), Rank::neg_infinity());
  EXPECT_EQ(Rank::parse("+inf").str(), "inf");
  EXPECT_EQ(Rank::parse("5/4"), Rank(rational(5, 4)));
}

TEST(RankInterval, RejectsReversedBounds) {
  EXPECT_THROW(RankInterval(Rank(1), Rank(0)), precondition_violation);
  const RankInterval r(Rank(0), Rank::infinity());
  EXPECT_TRUE(r.contains(Rank(5)));
  EXPECT_FALSE(r.bounded());
}
