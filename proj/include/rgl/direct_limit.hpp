#pragma once

// Rank-preserving embeddings L_k -> L_n over the divisibility order, the
// renormalized rank, the up-down metric, and Cauchy approximation of
// interval sets by grid-aligned elements.

#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "rgl/errors.hpp"
#include "rgl/finite/boolean.hpp"
#include "rgl/finite/subspace.hpp"
#include "rgl/interval.hpp"
#include "rgl/lattice.hpp"

namespace rgl {

template <class L>
concept TowerLevel = GradedLattice<L> && requires(const L& l) {
  { l.level() } -> std::convertible_to<int>;
};

/// Standard rank divided by the tower level, so the top has rank 1.
template <TowerLevel L>
Rank renormalized_rank(const L& l, const element_t<L>& x) {
  return Rank(Rational(Rank(l.rank(x)).value()) / l.level());
}

/// d(x, y) = 2 r(x v y) - r(x) - r(y) with renormalized ranks.
template <TowerLevel L>
Rank updown_metric(const L& l, const element_t<L>& x, const element_t<L>& y) {
  return Rational(2) * renormalized_rank(l, l.join(x, y)) - renormalized_rank(l, x) - renormalized_rank(l, y);
}

/// Same formula in the interval lattice, graded by Lebesgue measure.
inline Rank updown_metric(const IntervalLattice& l, const IntervalSet& x, const IntervalSet& y) {
  return updown_distance(l, x, y);
}

namespace detail {

inline int tower_ratio(int k, int n) {
  if (k < 1 || n < 1 || n % k != 0)
    throw precondition_violation("no embedding from level " + std::to_string(k) + " to level " + std::to_string(n) +
                                 ": " + std::to_string(k) + " does not divide " + std::to_string(n));
  return n / k;
}

}  // namespace detail

/// S subset [k] -> S x [n/k], flattened by (i, j) -> (i-1)(n/k) + j.
inline BitSubset embed_boolean(const BitSubset& s, int n) {
  const int r = detail::tower_ratio(s.n, n);
  std::vector<int> image;
  for (int i : s.members())
    for (int j = 1; j <= r; ++j) image.push_back((i - 1) * r + j);
  return BitSubset::from_members(n, image);
}

/// W subset F^k -> W (+) ... (+) W subset F^n, block b on coordinates
/// b*k+1 .. (b+1)*k.
inline Subspace embed_subspace(const Subspace& w, int n) {
  const int k = w.ambient();
  const int r = detail::tower_ratio(k, n);
  gf::Matrix rows;
  for (const auto& v : w.basis())
    for (int b = 0; b < r; ++b) {
      std::vector<int> row(n, 0);
      for (int c = 0; c < k; ++c) row[b * k + c] = v[c];
      rows.push_back(std::move(row));
    }
  return Subspace::span(w.prime(), n, std::move(rows));
}

inline Subspace embed_subspace(const Subspace& w, int n, int prime) {
  if (w.prime() != prime) throw ambient_mismatch("field mismatch: F_" + std::to_string(w.prime()) + " vs F_" + std::to_string(prime));
  return embed_subspace(w, n);
}

inline BitSubset embed(const BitSubset& s, int n) { return embed_boolean(s, n); }
inline Subspace embed(const Subspace& w, int n) { return embed_subspace(w, n); }

/// Which tower: Boolean lattices B_n or subspace lattices of F_p^n.
struct TowerFamily {
  enum class Kind { boolean, subspace };

  Kind kind = Kind::boolean;
  int prime = 2;

  static TowerFamily boolean() { return {Kind::boolean, 2}; }
  static TowerFamily subspace(int p) { return {Kind::subspace, p}; }

  std::string name() const { return kind == Kind::boolean ? "boolean" : "subspace F_" + std::to_string(prime); }
};

struct TowerCheck {
  bool pass = true;
  std::size_t checked = 0;
  std::optional<std::string> witness;
};

namespace detail {

template <class Fn>
auto with_level(const TowerFamily& f, int level, Fn&& fn) {
  if (f.kind == TowerFamily::Kind::boolean) return fn(BooleanLattice(level));
  return fn(SubspaceLattice(f.prime, level));
}

}  // namespace detail

/// phi^{k,n} == phi^{m,n} o phi^{k,m} on every element of level k.
inline TowerCheck coherence_check(const TowerFamily& f, int k, int m, int n) {
  detail::tower_ratio(k, m);
  detail::tower_ratio(m, n);
  return detail::with_level(f, k, [&](const auto& lk) {
    TowerCheck rep;
    for (const auto& x : lk.elements()) {
      ++rep.checked;
      if (!(embed(x, n) == embed(embed(x, m), n))) {
        rep.pass = false;
        rep.witness = lk.format(x);
        return rep;
      }
    }
    return rep;
  });
}

/// Exhaustive over pairs of level k: phi^{k,n} preserves renormalized rank,
/// meet and join, and the up-down distance.
inline TowerCheck embedding_check(const TowerFamily& f, int k, int n) {
  detail::tower_ratio(k, n);
  return detail::with_level(f, k, [&](const auto& lk) {
    using Lat = std::decay_t<decltype(lk)>;
    const Lat ln = [&] {
      if constexpr (std::is_same_v<Lat, BooleanLattice>) return BooleanLattice(n);
      else return SubspaceLattice(f.prime, n);
    }();
    TowerCheck rep;
    const auto elems = lk.elements();
    for (const auto& x : elems) {
      if (renormalized_rank(lk, x) != renormalized_rank(ln, embed(x, n))) {
        rep.pass = false;
        rep.witness = "rank of " + lk.format(x);
        return rep;
      }
      for (const auto& y : elems) {
        ++rep.checked;
        const auto ex = embed(x, n);
        const auto ey = embed(y, n);
        if (!(embed(lk.meet(x, y), n) == ln.meet(ex, ey)) || !(embed(lk.join(x, y), n) == ln.join(ex, ey)) ||
            updown_metric(lk, x, y) != updown_metric(ln, ex, ey)) {
          rep.pass = false;
          rep.witness = lk.format(x) + " , " + lk.format(y);
          return rep;
        }
      }
    }
    return rep;
  });
}

/// i in [n] -> ((i-1)/n, i/n].
inline IntervalSet boolean_to_interval(const BitSubset& s) {
  std::vector<Interval> raw;
  for (int i : s.members()) raw.push_back({rational(i - 1, s.n), rational(i, s.n)});
  return IntervalSet::normalize(std::move(raw));
}

/// Largest level-n grid set inside u: each piece shrinks inward to the
/// grid 1/n and vanishes if no full cell remains.
inline IntervalSet grid_inner_approximation(const IntervalSet& u, int n) {
  if (n < 1) throw precondition_violation("grid level must be positive");
  std::vector<Interval> raw;
  for (const auto& iv : u.intervals()) {
    Rational scaled_lo = iv.lo * n;
    Rational scaled_hi = iv.hi * n;
    Integer lo_cell = boost::multiprecision::numerator(scaled_lo) / boost::multiprecision::denominator(scaled_lo);
    if (Rational(lo_cell) < scaled_lo) lo_cell += 1;  // truncation -> ceil
    Integer hi_cell = boost::multiprecision::numerator(scaled_hi) / boost::multiprecision::denominator(scaled_hi);
    if (Rational(hi_cell) > scaled_hi) hi_cell -= 1;  // floor
    if (lo_cell < hi_cell) raw.push_back({Rational(lo_cell) / n, Rational(hi_cell) / n});
  }
  return IntervalSet::normalize(std::move(raw));
}

struct CauchyRow {
  int level;
  IntervalSet approximant;
  Rank to_target;
  std::optional<Rank> to_previous;
  Rank bound;  // 2 * endpoints(target) / level

  bool within_bound() const { return to_target <= bound; }
};

/// Inner grid approximants of `target` (inside (0,1]) along a divisibility
/// chain of levels, with up-down distances to the target and to the
/// previous approximant.
inline std::vector<CauchyRow> cauchy_approx(const IntervalSet& target, const std::vector<int>& levels) {
  const IntervalLattice unit = IntervalLattice::bounded(1);
  if (!unit.contains(target)) throw ambient_mismatch("target " + format(target) + " leaves (0,1]");
  if (levels.empty()) throw precondition_violation("no levels given");
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (!(levels[i - 1] < levels[i])) throw precondition_violation("levels must increase");
    detail::tower_ratio(levels[i - 1], levels[i]);
  }
  std::vector<CauchyRow> rows;
  for (int n : levels) {
    if (n < 1) throw precondition_violation("levels must be positive");
    IntervalSet approx = grid_inner_approximation(target, n);
    std::optional<Rank> prev;
    if (!rows.empty()) prev = updown_metric(unit, rows.back().approximant, approx);
    Rank bound = Rank(Rational(static_cast<long long>(2 * target.endpoint_count())) / n);
    rows.push_back({n, approx, updown_metric(unit, approx, target), prev, bound});
  }
  return rows;
}

}  // namespace rgl
