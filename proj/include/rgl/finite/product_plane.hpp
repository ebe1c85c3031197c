#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "rgl/errors.hpp"
#include "rgl/rank.hpp"

namespace rgl {

/// Point of R x R with symbolic extrema adjoined.
struct PlanePoint {
  enum class Kind { point, bottom, top };

  Kind kind = Kind::point;
  Rational a = 0;
  Rational b = 0;

  static PlanePoint at(Rational a, Rational b) { return {Kind::point, std::move(a), std::move(b)}; }
  static PlanePoint hat_bottom() { return {Kind::bottom, 0, 0}; }
  static PlanePoint hat_top() { return {Kind::top, 0, 0}; }

  friend bool operator==(const PlanePoint& x, const PlanePoint& y) {
    return x.kind == y.kind && (x.kind != Kind::point || (x.a == y.a && x.b == y.b));
  }
};

inline std::string format(const PlanePoint& p) {
  switch (p.kind) {
    case PlanePoint::Kind::bottom: return "0^";
    case PlanePoint::Kind::top: return "1^";
    default: return "(" + to_string(p.a) + "," + to_string(p.b) + ")";
  }
}

/// R x R u {0^, 1^}: entrywise min/max, rank(a,b) = a + b. Infinite, so it
/// takes part in none of the exhaustive enumerations.
class ProductPlaneLattice {
 public:
  using element_type = PlanePoint;
  using Kind = PlanePoint::Kind;

  PlanePoint meet(const PlanePoint& x, const PlanePoint& y) const {
    if (x.kind == Kind::bottom || y.kind == Kind::top) return x;
    if (y.kind == Kind::bottom || x.kind == Kind::top) return y;
    return PlanePoint::at(std::min(x.a, y.a), std::min(x.b, y.b));
  }
  PlanePoint join(const PlanePoint& x, const PlanePoint& y) const {
    if (x.kind == Kind::top || y.kind == Kind::bottom) return x;
    if (y.kind == Kind::top || x.kind == Kind::bottom) return y;
    return PlanePoint::at(std::max(x.a, y.a), std::max(x.b, y.b));
  }
  Rank rank(const PlanePoint& x) const {
    switch (x.kind) {
      case Kind::bottom: return Rank::neg_infinity();
      case Kind::top: return Rank::infinity();
      default: return Rank(x.a + x.b);
    }
  }
  std::optional<PlanePoint> bottom() const { return PlanePoint::hat_bottom(); }
  std::optional<PlanePoint> top() const { return PlanePoint::hat_top(); }
  std::string format(const PlanePoint& x) const { return rgl::format(x); }

  friend bool operator==(const ProductPlaneLattice&, const ProductPlaneLattice&) = default;
};


struct PlaneScanRow {
  Rational b;
  Rank value;
};

/// Meet side: rho((0,b) ^ (1,0)) along the chain {(0,b)} against the value
/// at 1^. Join side: rho((0,b) v (-1,0)) against the value at 0^.
struct PlaneLimitReport {
  std::vector<PlaneScanRow> meet_scan;
  Rank meet_sup;
  Rank meet_at_top;
  std::vector<PlaneScanRow> join_scan;
  Rank join_inf;
  Rank join_at_bottom;

  bool discontinuous_at_pos_inf() const { return meet_sup != meet_at_top; }
  bool discontinuous_at_neg_inf() const { return join_inf != join_at_bottom; }
};

inline PlaneLimitReport product_plane_limit_demo(const std::vector<Rational>& b_values) {
  for (std::size_t i = 1; i < b_values.size(); ++i)
    if (!(b_values[i - 1] < b_values[i])) throw precondition_violation("b values must be strictly increasing");
  if (b_values.empty()) throw precondition_violation("empty b scan");
  const ProductPlaneLattice l;
  const PlanePoint right = PlanePoint::at(1, 0);
  const PlanePoint left = PlanePoint::at(-1, 0);
  PlaneLimitReport rep;
  rep.meet_sup = Rank::neg_infinity();
  rep.join_inf = Rank::infinity();
  for (const auto& b : b_values) {
    const PlanePoint c = PlanePoint::at(0, b);
    Rank m = l.rank(l.meet(c, right));
    Rank j = l.rank(l.join(c, left));
    rep.meet_scan.push_back({b, m});
    rep.join_scan.push_back({b, j});
    rep.meet_sup = max(rep.meet_sup, m);
    rep.join_inf = min(rep.join_inf, j);
  }
  rep.meet_at_top = l.rank(l.meet(PlanePoint::hat_top(), right));
  rep.join_at_bottom = l.rank(l.join(PlanePoint::hat_bottom(), left));
  return rep;
}

}  // namespace rgl
