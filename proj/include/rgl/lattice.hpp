#pragma once

// Graded-lattice contract and the family-independent rank-modularity
// predicates: defect, balance residuals, diamond bounds, Lipschitz scans,
// and adjunction of synthetic extrema.

#include <array>
#include <concepts>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rgl/errors.hpp"
#include "rgl/rank.hpp"

namespace rgl {

template <class L>
using element_t = typename L::element_type;

/// A lattice with an exact grading. `bottom()`/`top()` return nullopt when
/// the extremum does not exist. Order is never queried separately: x <= y
/// is decided as meet(x, y) == x.
template <class L>
concept GradedLattice = requires(const L& l, const element_t<L>& x) {
  { l.meet(x, x) } -> std::convertible_to<element_t<L>>;
  { l.join(x, x) } -> std::convertible_to<element_t<L>>;
  { l.rank(x) } -> std::convertible_to<Rank>;
  { l.bottom() } -> std::convertible_to<std::optional<element_t<L>>>;
  { l.top() } -> std::convertible_to<std::optional<element_t<L>>>;
  { l.format(x) } -> std::convertible_to<std::string>;
  { x == x } -> std::convertible_to<bool>;
};

template <class L>
concept FiniteLattice = GradedLattice<L> && requires(const L& l) {
  { l.elements() } -> std::convertible_to<std::vector<element_t<L>>>;
};

enum class Side { meet, join };

inline const char* to_string(Side s) { return s == Side::meet ? "meet" : "join"; }

template <GradedLattice L>
bool leq(const L& l, const element_t<L>& x, const element_t<L>& y) {
  return l.meet(x, y) == x;
}

template <GradedLattice L>
bool less(const L& l, const element_t<L>& x, const element_t<L>& y) {
  return !(x == y) && leq(l, x, y);
}

template <GradedLattice L>
bool comparable(const L& l, const element_t<L>& x, const element_t<L>& y) {
  return leq(l, x, y) || leq(l, y, x);
}

template <GradedLattice L>
element_t<L> apply(const L& l, Side side, const element_t<L>& x, const element_t<L>& y) {
  return side == Side::meet ? l.meet(x, y) : l.join(x, y);
}

/// rho(x v m) + rho(x ^ m) - rho(x) - rho(m). Comparable pairs are zero
/// without touching arithmetic, so extrema of infinite rank are fine; an
/// incomparable pair whose sums mix +inf and -inf throws indeterminate_form.
template <GradedLattice L>
Rank rank_modular_defect(const L& l, const element_t<L>& m, const element_t<L>& x) {
  if (comparable(l, m, x)) return Rank(0);
  Rank up = Rank(l.rank(l.join(x, m))) + Rank(l.rank(l.meet(x, m)));
  Rank down = Rank(l.rank(x)) + Rank(l.rank(m));
  return up - down;
}

template <GradedLattice L, class Range>
bool rank_modular_against(const L& l, const element_t<L>& m, const Range& samples) {
  for (const auto& x : samples)
    if (rank_modular_defect(l, m, x) != Rank(0)) return false;
  return true;
}

struct BalanceResiduals {
  Rank along_chain;  // moving w -> z with m fixed
  Rank along_chief;  // moving m2 -> m with z fixed

  friend bool operator==(const BalanceResiduals&, const BalanceResiduals&) = default;
  bool zero() const { return along_chain == Rank(0) && along_chief == Rank(0); }
};

namespace detail {

template <GradedLattice L>
void require_leq(const L& l, const element_t<L>& lo, const element_t<L>& hi, const char* what) {
  if (!leq(l, lo, hi))
    throw precondition_violation(std::string(what) + " not comparable: " + l.format(lo) + " </= " + l.format(hi));
}

template <GradedLattice L>
Rank rank_of(const L& l, const element_t<L>& x) {
  return Rank(l.rank(x));
}

}  // namespace detail

/// The two residuals of the balance identities for rank-modular m2 <= m and
/// w <= z. Both are exactly zero whenever m and m2 are rank modular.
template <GradedLattice L>
BalanceResiduals rm_balance_residuals(const L& l, const element_t<L>& m, const element_t<L>& m2,
                                      const element_t<L>& w, const element_t<L>& z) {
  detail::require_leq(l, w, z, "w, z");
  detail::require_leq(l, m2, m, "m2, m");
  auto r = [&](const element_t<L>& x) { return detail::rank_of(l, x); };
  Rank mz = r(l.meet(m, z)) + r(l.join(m, z));
  Rank mw = r(l.meet(m, w)) + r(l.join(m, w));
  Rank m2z = r(l.meet(m2, z)) + r(l.join(m2, z));
  return {mz - mw - (r(z) - r(w)), mz - m2z - (r(m) - r(m2))};
}

struct DiamondBound {
  Rank lhs;
  Rank rhs;
  Rank slack() const { return rhs - lhs; }
  bool holds() const { return lhs <= rhs; }
};

/// Rows: [0] meet/join differences along w -> z, [1] along m2 -> m.
/// Index within a row: 0 = meet side, 1 = join side.
struct DiamondReport {
  std::array<std::array<DiamondBound, 2>, 2> rows;

  bool all_hold() const {
    for (const auto& row : rows)
      for (const auto& b : row)
        if (!b.holds()) return false;
    return true;
  }
  /// Both slacks of a row sum to the row's right-hand side.
  bool rows_balanced() const {
    for (const auto& row : rows)
      if (row[0].slack() + row[1].slack() != row[0].rhs) return false;
    return true;
  }
};

template <GradedLattice L>
DiamondReport diamond_bounds_check(const L& l, const element_t<L>& m, const element_t<L>& m2,
                                   const element_t<L>& w, const element_t<L>& z) {
  detail::require_leq(l, w, z, "w, z");
  detail::require_leq(l, m2, m, "m2, m");
  auto r = [&](const element_t<L>& x) { return detail::rank_of(l, x); };
  const Rank height = r(z) - r(w);
  const Rank gap = r(m) - r(m2);
  DiamondReport rep;
  rep.rows[0][0] = {r(l.meet(m, z)) - r(l.meet(m, w)), height};
  rep.rows[0][1] = {r(l.join(m, z)) - r(l.join(m, w)), height};
  rep.rows[1][0] = {r(l.meet(m, z)) - r(l.meet(m2, z)), gap};
  rep.rows[1][1] = {r(l.join(m, z)) - r(l.join(m2, z)), gap};
  return rep;
}

/// Samples (rank, element) of a chain, strictly increasing in both.
template <class E>
class ChainSample {
 public:
  struct Point {
    Rank rank;
    E element;
  };

  ChainSample() = default;

  template <GradedLattice L>
  static ChainSample build(const L& l, const std::vector<E>& elements) {
    ChainSample c;
    for (const auto& e : elements) {
      Rank rk = l.rank(e);
      if (!c.points_.empty()) {
        const auto& prev = c.points_.back();
        if (!(prev.rank < rk) || !less(l, prev.element, e))
          throw precondition_violation("chain sample not strictly increasing at " + l.format(e));
      }
      c.points_.push_back({rk, e});
    }
    return c;
  }

  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

 private:
  std::vector<Point> points_;
};

/// Max over consecutive samples of |rho(m [] c2) - rho(m [] c1)| / (k2 - k1).
template <GradedLattice L>
Rational lipschitz_scan(const L& l, const ChainSample<element_t<L>>& chain, const element_t<L>& m, Side mode) {
  Rational worst = 0;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const auto& a = chain[i - 1];
    const auto& b = chain[i];
    if (!a.rank.is_finite() || !b.rank.is_finite())
      throw precondition_violation("lipschitz scan needs finite chain ranks");
    Rational step = b.rank.value() - a.rank.value();
    if (step <= 0) throw precondition_violation("zero-length step in lipschitz scan");
    Rank diff = Rank(l.rank(apply(l, mode, m, b.element))) - Rank(l.rank(apply(l, mode, m, a.element)));
    Rational ratio = abs(diff.value()) / step;
    if (ratio > worst) worst = ratio;
  }
  return worst;
}

/// Up-down path length 2 rho(x v y) - rho(x) - rho(y).
template <GradedLattice L>
Rank updown_distance(const L& l, const element_t<L>& x, const element_t<L>& y) {
  return Rational(2) * Rank(l.rank(l.join(x, y))) - Rank(l.rank(x)) - Rank(l.rank(y));
}

/// (w v m) ^ z == w v (m ^ z) for w <= z.
template <GradedLattice L>
bool left_modular_at(const L& l, const element_t<L>& m, const element_t<L>& w, const element_t<L>& z) {
  detail::require_leq(l, w, z, "w, z");
  return l.meet(l.join(w, m), z) == l.join(w, l.meet(m, z));
}

/// (lo v z) ^ hi == lo v (z ^ hi) for chief elements lo <= hi and any z.
template <GradedLattice L>
bool chief_pair_modular_at(const L& l, const element_t<L>& lo, const element_t<L>& hi, const element_t<L>& z) {
  detail::require_leq(l, lo, hi, "chief pair");
  return l.meet(l.join(lo, z), hi) == l.join(lo, l.meet(z, hi));
}

/// w v (m ^ z): the projection of m into the interval [w, z].
template <GradedLattice L>
element_t<L> project_into_interval(const L& l, const element_t<L>& m, const element_t<L>& w, const element_t<L>& z) {
  detail::require_leq(l, w, z, "w, z");
  return l.join(w, l.meet(m, z));
}

/// Rank-modular defect of the projection of m against x, computed inside
/// [w, z]. Shifting ranks by rho(w) leaves the defect unchanged.
template <GradedLattice L>
Rank interval_projection_defect(const L& l, const element_t<L>& m, const element_t<L>& w, const element_t<L>& z,
                                const element_t<L>& x) {
  if (!leq(l, w, x) || !leq(l, x, z))
    throw precondition_violation("probe " + l.format(x) + " outside the interval [" + l.format(w) + ", " + l.format(z) + "]");
  return rank_modular_defect(l, project_into_interval(l, m, w, z), x);
}

/// Checks the lattice laws on one triple; returns a description of the
/// first failed law, or nullopt.
template <GradedLattice L>
std::optional<std::string> lattice_law_violation(const L& l, const element_t<L>& x, const element_t<L>& y,
                                                 const element_t<L>& z) {
  auto fail = [&](const char* law) {
    return std::optional<std::string>(std::string(law) + " at x=" + l.format(x) + " y=" + l.format(y) +
                                      " z=" + l.format(z));
  };
  if (!(l.meet(x, x) == x) || !(l.join(x, x) == x)) return fail("idempotence");
  if (!(l.meet(x, y) == l.meet(y, x)) || !(l.join(x, y) == l.join(y, x))) return fail("commutativity");
  if (!(l.meet(l.meet(x, y), z) == l.meet(x, l.meet(y, z)))) return fail("meet associativity");
  if (!(l.join(l.join(x, y), z) == l.join(x, l.join(y, z)))) return fail("join associativity");
  if (!(l.meet(x, l.join(x, y)) == x) || !(l.join(x, l.meet(x, y)) == x)) return fail("absorption");
  if (less(l, x, y) && !(Rank(l.rank(x)) < Rank(l.rank(y)))) return fail("strictly increasing rank");
  return std::nullopt;
}

/// The same lattice with its rank replaced by another grading.
template <GradedLattice L, class Grading>
class Regraded {
 public:
  using element_type = element_t<L>;

  Regraded(L base, Grading grading) : base_(std::move(base)), grading_(std::move(grading)) {}

  element_type meet(const element_type& x, const element_type& y) const { return base_.meet(x, y); }
  element_type join(const element_type& x, const element_type& y) const { return base_.join(x, y); }
  Rank rank(const element_type& x) const { return grading_(x); }
  std::optional<element_type> bottom() const { return base_.bottom(); }
  std::optional<element_type> top() const { return base_.top(); }
  std::string format(const element_type& x) const { return base_.format(x); }

  const L& base() const { return base_; }

 private:
  L base_;
  Grading grading_;
};

/// Element of a lattice with synthetic extrema adjoined.
template <class E>
struct Adjoined {
  enum class Tag { element, top, bottom };

  Tag tag = Tag::element;
  std::optional<E> value;

  static Adjoined of(E e) { return {Tag::element, std::move(e)}; }
  static Adjoined hat_top() { return {Tag::top, std::nullopt}; }
  static Adjoined hat_bottom() { return {Tag::bottom, std::nullopt}; }

  friend bool operator==(const Adjoined& a, const Adjoined& b) {
    if (a.tag != b.tag) return false;
    return a.tag != Tag::element || *a.value == *b.value;
  }
};

template <GradedLattice L>
class AdjoinedLattice {
 public:
  using base_element = element_t<L>;
  using element_type = Adjoined<base_element>;
  using Tag = typename element_type::Tag;

  AdjoinedLattice(L base, std::optional<Rank> top_rank, std::optional<Rank> bottom_rank)
      : base_(std::move(base)), top_rank_(std::move(top_rank)), bottom_rank_(std::move(bottom_rank)) {}

  element_type meet(const element_type& x, const element_type& y) const {
    if (x.tag == Tag::bottom || y.tag == Tag::top) return x;
    if (y.tag == Tag::bottom || x.tag == Tag::top) return y;
    return element_type::of(base_.meet(*x.value, *y.value));
  }
  element_type join(const element_type& x, const element_type& y) const {
    if (x.tag == Tag::top || y.tag == Tag::bottom) return x;
    if (y.tag == Tag::top || x.tag == Tag::bottom) return y;
    return element_type::of(base_.join(*x.value, *y.value));
  }
  Rank rank(const element_type& x) const {
    switch (x.tag) {
      case Tag::top: return *top_rank_;
      case Tag::bottom: return *bottom_rank_;
      default: return base_.rank(*x.value);
    }
  }
  std::optional<element_type> bottom() const {
    if (bottom_rank_) return element_type::hat_bottom();
    if (auto b = base_.bottom()) return element_type::of(*b);
    return std::nullopt;
  }
  std::optional<element_type> top() const {
    if (top_rank_) return element_type::hat_top();
    if (auto t = base_.top()) return element_type::of(*t);
    return std::nullopt;
  }
  std::string format(const element_type& x) const {
    switch (x.tag) {
      case Tag::top: return "1^";
      case Tag::bottom: return "0^";
      default: return base_.format(*x.value);
    }
  }

  element_type lift(base_element e) const { return element_type::of(std::move(e)); }
  const L& base() const { return base_; }

 private:
  L base_;
  std::optional<Rank> top_rank_;
  std::optional<Rank> bottom_rank_;
};

/// Adjoins a maximum of rank `sup_rank` if L has no top and a minimum of rank
/// `inf_rank` if L has no bottom. Refuses when L already has both extrema.
/// The synthetic top is rank modular: top v m = top, top ^ m = m.
template <GradedLattice L>
AdjoinedLattice<L> adjoin_bounds(L base, Rank sup_rank, Rank inf_rank) {
  const bool need_top = !base.top().has_value();
  const bool need_bottom = !base.bottom().has_value();
  if (!need_top && !need_bottom)
    throw precondition_violation("lattice already has both extrema; nothing to adjoin");
  std::optional<Rank> t, b;
  if (need_top) t = std::move(sup_rank);
  if (need_bottom) b = std::move(inf_rank);
  return AdjoinedLattice<L>(std::move(base), std::move(t), std::move(b));
}

}  // namespace rgl
