#include <gtest/gtest.h>

#include "rgl/json.hpp"
#include "rgl/rgl.hpp"

using namespace rgl;
namespace rj = rgl::json;
using Json = nlohmann::json;

TEST(Json, RationalRoundTripIsExact) {
  Sampler s(9);
  for (int i = 0; i < 200; ++i) {
    const Rational q = s.unit_fraction() * rational(s.uniform(-1000, 1000), s.uniform(1, 97));
    EXPECT_EQ(rj::decode_rational(Json::parse(rj::encode(q).dump())), q);
  }
  const auto huge = parse_rational("-98765432109876543210987654321/12345678901234567");
  EXPECT_EQ(rj::decode_rational(rj::encode(huge)), huge);
  EXPECT_THROW(rj::decode_rational(Json(0.5)), parse_error);
  EXPECT_THROW(rj::decode_rational(Json("1/0")), parse_error);
}

TEST(Json, RankRoundTrip) {
  for (const auto& r : {Rank(rational(-3, 7)), Rank::infinity(), Rank::neg_infinity()})
    EXPECT_EQ(rj::decode_rank(rj::encode(r)), r);
}

TEST(Json, IntervalSet) {
  const auto u = IntervalSet::of({{0, rational(1, 3)}, {rational(1, 2), 2}});
  EXPECT_EQ(rj::encode(u).dump(), R"({"intervals":[["0/1","1/3"],["1/2","2/1"]]})");
  EXPECT_EQ(rj::decode_interval_set(rj::encode(u)), u);
  EXPECT_EQ(rj::decode_interval_set(Json::parse(R"({"intervals":[["1","2"],["0","1"]]})")), IntervalSet::single(0, 2));
  EXPECT_THROW(rj::decode_interval_set(Json::parse(R"({"intervals":[["1","1"]]})")), parse_error);
  EXPECT_THROW(rj::decode_interval_set(Json::parse(R"({"pieces":[]})")), parse_error);
  EXPECT_THROW(rj::decode_interval_set(Json::parse(R"({"intervals":[["1"]]})")), parse_error);
}

TEST(Json, Density) {
  const StepDensity f({0, 1, 2}, {1, 2});
  const auto g = rj::decode_density(rj::encode(f));
  EXPECT_EQ(g.breakpoints(), f.breakpoints());
  EXPECT_EQ(g.values(), f.values());
  EXPECT_THROW(rj::decode_density(Json::parse(R"({"breakpoints":["0","1"],"values":["1","2"]})")), parse_error);
  EXPECT_THROW(rj::decode_density(Json::parse(R"({"breakpoints":["0","1"],"values":["-1"]})")), parse_error);
}

TEST(Json, FiniteElements) {
  const auto s = BitSubset::of(5, {2, 5});
  EXPECT_EQ(rj::encode(s).dump(), "[2,5]");
  EXPECT_EQ(rj::decode_bit_subset(rj::encode(s), 5), s);
  EXPECT_THROW(rj::decode_bit_subset(Json::parse("[5,2]"), 5), parse_error);
  EXPECT_THROW(rj::decode_bit_subset(Json::parse("[6]"), 5), parse_error);

  const auto p = SetPartition::from_blocks(4, {{1, 4}, {2}, {3}});
  EXPECT_EQ(rj::decode_partition(rj::encode(p), 4), p);
  EXPECT_THROW(rj::decode_partition(Json::parse("[[1,2]]"), 4), parse_error);

  const auto w = Subspace::span(3, 3, {{1, 2, 0}, {0, 0, 1}});
  EXPECT_EQ(rj::decode_subspace(rj::encode(w), 3, 3), w);
  EXPECT_THROW(rj::decode_subspace(Json::parse("[[1,3,0]]"), 3, 3), parse_error);
  EXPECT_THROW(rj::decode_subspace(Json::parse("[[1,0]]"), 3, 3), parse_error);
}

TEST(Json, PlanePoints) {
  for (const auto& x : {PlanePoint::at(rational(1, 2), -3), PlanePoint::hat_bottom(), PlanePoint::hat_top()})
    EXPECT_EQ(rj::decode_plane_point(rj::encode(x)), x);
  EXPECT_EQ(rj::encode(PlanePoint::hat_top()), Json("top"));
  EXPECT_THROW(rj::decode_plane_point(Json("middle")), parse_error);
}

TEST(Json, LatticeSpecs) {
  rj::LatticeSpec sub;
  sub.kind = rj::LatticeSpec::Kind::subspace;
  sub.n = 3;
  sub.prime = 5;
  const auto back = rj::decode_lattice_spec(rj::encode(sub));
  EXPECT_EQ(back.kind, sub.kind);
  EXPECT_EQ(back.n, 3);
  EXPECT_EQ(back.prime, 5);
  EXPECT_EQ(rj::decode_lattice_spec(Json::parse(R"({"type":"interval","length":"5/2"})")).length, rational(5, 2));
  EXPECT_THROW(rj::decode_lattice_spec(Json::parse(R"({"type":"interval","length":"0"})")), parse_error);
  EXPECT_THROW(rj::decode_lattice_spec(Json::parse(R"({"type":"torus","n":2})")), parse_error);
}

TEST(Json, Cutsets) {
  const LevelSetCutset c{two_step_density(), 1};
  const auto back = rj::decode_level_cutset(rj::encode(c), 2);
  EXPECT_EQ(back.value, 1);
  EXPECT_EQ(back.grading.values(), c.grading.values());
  const auto rho = rj::decode_level_cutset(Json::parse(R"({"type":"level","grading":"rho","value":"1/2"})"), 3);
  EXPECT_EQ(rho.grading.total(), 3);

  const ExplicitAntichain<BitSubset> a{{BitSubset::of(3, {1}), BitSubset::of(3, {2, 3})}};
  const auto j = rj::encode(a);
  const auto decoded = rj::decode_explicit_cutset<BitSubset>(j, [](const Json& e) { return rj::decode_bit_subset(e, 3); });
  EXPECT_EQ(decoded.elements, a.elements);
  EXPECT_THROW(rj::decode_level_cutset(j, 3), parse_error);
}

TEST(Json, ParseText) {
  EXPECT_EQ(rj::parse_text(R"({"a":1})", "x")["a"], 1);
  EXPECT_THROW(rj::parse_text("{", "input.json"), parse_error);
}
