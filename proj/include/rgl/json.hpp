#pragma once

// JSON encodings. Rationals travel as "p/q" strings so round trips are
// bit-exact; every decoder throws parse_error on malformed input.

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rgl/errors.hpp"
#include "rgl/finite/boolean.hpp"
#include "rgl/finite/partition.hpp"
#include "rgl/finite/product_plane.hpp"
#include "rgl/finite/subspace.hpp"
#include "rgl/interval.hpp"
#include "rgl/rank.hpp"
#include "rgl/regrading.hpp"

namespace rgl::json {

using nlohmann::json;

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw parse_error(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw parse_error(std::string("missing field \"") + key + "\"");
  return *it;
}

inline const json& array(const json& j, const char* what) {
  if (!j.is_array()) throw parse_error(std::string(what) + " must be an array");
  return j;
}

inline int integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw parse_error(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace detail

inline json encode(const Rational& q) { return to_string(q); }

inline Rational decode_rational(const json& j) {
  if (!j.is_string()) throw parse_error("rational must be a \"p/q\" string, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

inline json encode(const Rank& r) { return r.str(); }

inline Rank decode_rank(const json& j) {
  if (!j.is_string()) throw parse_error("rank must be a string, got " + j.dump());
  return Rank::parse(j.get<std::string>());
}

inline json encode(const IntervalSet& u) {
  json pieces = json::array();
  for (const auto& iv : u.intervals()) pieces.push_back({to_string(iv.lo), to_string(iv.hi)});
  return {{"intervals", pieces}};
}

inline IntervalSet decode_interval_set(const json& j) {
  std::vector<Interval> raw;
  for (const auto& p : detail::array(detail::field(j, "intervals"), "intervals")) {
    if (!p.is_array() || p.size() != 2) throw parse_error("interval must be a pair, got " + p.dump());
    Rational lo = decode_rational(p[0]), hi = decode_rational(p[1]);
    if (!(lo < hi)) throw parse_error("empty interval (" + to_string(lo) + "," + to_string(hi) + "]");
    raw.push_back({std::move(lo), std::move(hi)});
  }
  return IntervalSet::normalize(std::move(raw));
}

inline json encode(const StepDensity& f) {
  json b = json::array(), v = json::array();
  for (const auto& q : f.breakpoints()) b.push_back(to_string(q));
  for (const auto& q : f.values()) v.push_back(to_string(q));
  return {{"breakpoints", b}, {"values", v}};
}

inline StepDensity decode_density(const json& j) {
  std::vector<Rational> b, v;
  for (const auto& q : detail::array(detail::field(j, "breakpoints"), "breakpoints")) b.push_back(decode_rational(q));
  for (const auto& q : detail::array(detail::field(j, "values"), "values")) v.push_back(decode_rational(q));
  try {
    return StepDensity(std::move(b), std::move(v));
  } catch (const lattice_error& e) {
    throw parse_error(std::string("invalid density: ") + e.what());
  }
}

inline json encode(const BitSubset& s) { return s.members(); }

inline BitSubset decode_bit_subset(const json& j, int n) {
  std::vector<int> members;
  for (const auto& x : detail::array(j, "subset")) {
    int i = detail::integer(x, "subset member");
    if (i < 1 || i > n) throw parse_error("subset member " + std::to_string(i) + " outside [1," + std::to_string(n) + "]");
    if (!members.empty() && i <= members.back()) throw parse_error("subset members must be strictly increasing");
    members.push_back(i);
  }
  return BitSubset::from_members(n, members);
}

inline json encode(const SetPartition& p) { return p.blocks(); }

inline SetPartition decode_partition(const json& j, int n) {
  std::vector<std::vector<int>> blocks;
  for (const auto& b : detail::array(j, "partition")) {
    std::vector<int> block;
    for (const auto& x : detail::array(b, "block")) block.push_back(detail::integer(x, "block member"));
    blocks.push_back(std::move(block));
  }
  try {
    return SetPartition::from_blocks(n, blocks);
  } catch (const lattice_error& e) {
    throw parse_error(std::string("invalid partition: ") + e.what());
  }
}

/// Row-major basis matrix with entries in [0, p).
inline json encode(const Subspace& s) { return s.basis(); }

inline Subspace decode_subspace(const json& j, int p, int n) {
  gf::Matrix rows;
  for (const auto& r : detail::array(j, "subspace")) {
    std::vector<int> row;
    for (const auto& x : detail::array(r, "row")) {
      int v = detail::integer(x, "matrix entry");
      if (v < 0 || v >= p) throw parse_error("matrix entry " + std::to_string(v) + " outside F_" + std::to_string(p));
      row.push_back(v);
    }
    if (static_cast<int>(row.size()) != n)
      throw parse_error("row of length " + std::to_string(row.size()) + " in dimension " + std::to_string(n));
    rows.push_back(std::move(row));
  }
  return Subspace::span(p, n, std::move(rows));
}

inline json encode(const PlanePoint& x) {
  switch (x.kind) {
    case PlanePoint::Kind::bottom: return "bottom";
    case PlanePoint::Kind::top: return "top";
    default: return json::array({to_string(x.a), to_string(x.b)});
  }
}

inline PlanePoint decode_plane_point(const json& j) {
  if (j == "bottom") return PlanePoint::hat_bottom();
  if (j == "top") return PlanePoint::hat_top();
  if (!j.is_array() || j.size() != 2) throw parse_error("plane point must be a pair, \"bottom\" or \"top\"");
  return PlanePoint::at(decode_rational(j[0]), decode_rational(j[1]));
}

/// Which lattice an input file talks about.
struct LatticeSpec {
  enum class Kind { interval, boolean, partition, subspace };
  Kind kind = Kind::interval;
  Rational length = 1;  // interval
  int n = 0;            // finite families
  int prime = 2;        // subspace
};

inline json encode(const LatticeSpec& s) {
  switch (s.kind) {
    case LatticeSpec::Kind::interval: return {{"type", "interval"}, {"length", to_string(s.length)}};
    case LatticeSpec::Kind::boolean: return {{"type", "boolean"}, {"n", s.n}};
    case LatticeSpec::Kind::partition: return {{"type", "partition"}, {"n", s.n}};
    default: return {{"type", "subspace"}, {"p", s.prime}, {"n", s.n}};
  }
}

inline LatticeSpec decode_lattice_spec(const json& j) {
  const json& t = detail::field(j, "type");
  LatticeSpec s;
  if (t == "interval") {
    s.kind = LatticeSpec::Kind::interval;
    s.length = decode_rational(detail::field(j, "length"));
    if (!(s.length > 0)) throw parse_error("interval ambient length must be positive");
    return s;
  }
  s.n = detail::integer(detail::field(j, "n"), "n");
  if (t == "boolean") s.kind = LatticeSpec::Kind::boolean;
  else if (t == "partition") s.kind = LatticeSpec::Kind::partition;
  else if (t == "subspace") {
    s.kind = LatticeSpec::Kind::subspace;
    s.prime = detail::integer(detail::field(j, "p"), "p");
  } else
    throw parse_error("unknown lattice type " + t.dump());
  return s;
}

/// Grading for a level cutset: "rho" (unit density) or {"density": {...}}.
inline StepDensity decode_grading(const json& j, const Rational& length) {
  if (j == "rho") return StepDensity::unit(length);
  return decode_density(detail::field(j, "density"));
}

inline json encode(const LevelSetCutset& c) {
  return {{"type", "level"}, {"grading", {{"density", encode(c.grading)}}}, {"value", to_string(c.value)}};
}

inline LevelSetCutset decode_level_cutset(const json& j, const Rational& length) {
  if (detail::field(j, "type") != "level") throw parse_error("expected a level cutset");
  return {decode_grading(detail::field(j, "grading"), length), decode_rational(detail::field(j, "value"))};
}

template <class E>
json encode(const ExplicitAntichain<E>& a) {
  json elems = json::array();
  for (const auto& e : a.elements) elems.push_back(encode(e));
  return {{"type", "explicit"}, {"elements", elems}};
}

template <class E, class Decode>
ExplicitAntichain<E> decode_explicit_cutset(const json& j, Decode&& decode) {
  if (detail::field(j, "type") != "explicit") throw parse_error("expected an explicit cutset");
  ExplicitAntichain<E> a;
  for (const auto& e : detail::array(detail::field(j, "elements"), "elements")) a.elements.push_back(decode(e));
  return a;
}

inline json parse_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(source + ": " + e.what());
  }
}

}  // namespace rgl::json
