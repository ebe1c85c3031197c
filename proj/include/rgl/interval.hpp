#pragma once

// The measurable Boolean lattice at desk scale: finite unions of half-open
// rational intervals (a, b], graded by Lebesgue measure or by a step
// density, with exact piecewise-linear profiles along the prefix chief chain.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rgl/errors.hpp"
#include "rgl/lattice.hpp"
#include "rgl/rank.hpp"

namespace rgl {

/// Half-open (lo, hi].
struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Sorted, disjoint, non-adjacent union of half-open intervals. Canonical:
/// two sets are equal as measurable sets iff their interval lists agree.
class IntervalSet {
 public:
  IntervalSet() = default;

  /// Sorts and merges overlapping or touching pieces. Each raw pair needs lo < hi.
  static IntervalSet normalize(std::vector<Interval> raw) {
    for (const auto& iv : raw)
      if (!(iv.lo < iv.hi))
        throw precondition_violation("degenerate interval (" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]");
    std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    IntervalSet out;
    for (auto& iv : raw) {
      if (!out.pieces_.empty() && iv.lo <= out.pieces_.back().hi) {
        if (iv.hi > out.pieces_.back().hi) out.pieces_.back().hi = iv.hi;
      } else {
        out.pieces_.push_back(std::move(iv));
      }
    }
    return out;
  }

  static IntervalSet of(std::initializer_list<std::pair<Rational, Rational>> raw) {
    std::vector<Interval> v;
    for (const auto& [a, b] : raw) v.push_back({a, b});
    return normalize(std::move(v));
  }

  static IntervalSet single(const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) return {};
    return normalize({{lo, hi}});
  }

  const std::vector<Interval>& intervals() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  std::size_t size() const { return pieces_.size(); }

  /// Number of interval endpoints (2 per piece).
  std::size_t endpoint_count() const { return 2 * pieces_.size(); }

  std::optional<Rational> inf() const {
    if (pieces_.empty()) return std::nullopt;
    return pieces_.front().lo;
  }
  std::optional<Rational> sup() const {
    if (pieces_.empty()) return std::nullopt;
    return pieces_.back().hi;
  }

  bool is_canonical() const {
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      if (!(pieces_[i].lo < pieces_[i].hi)) return false;
      if (i > 0 && !(pieces_[i - 1].hi < pieces_[i].lo)) return false;
    }
    return true;
  }

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> pieces_;
};

inline std::string format(const IntervalSet& u) {
  if (u.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < u.intervals().size(); ++i) {
    const auto& iv = u.intervals()[i];
    out += (i ? " u (" : "(") + to_string(iv.lo) + "," + to_string(iv.hi) + "]";
  }
  return out;
}

inline IntervalSet intersect(const IntervalSet& u, const IntervalSet& v) {
  std::vector<Interval> out;
  const auto& a = u.intervals();
  const auto& b = v.intervals();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const Rational& lo = std::max(a[i].lo, b[j].lo);
    const Rational& hi = std::min(a[i].hi, b[j].hi);
    if (lo < hi) out.push_back({lo, hi});
    if (a[i].hi < b[j].hi)
      ++i;
    else
      ++j;
  }
  return IntervalSet::normalize(std::move(out));
}

inline IntervalSet unite(const IntervalSet& u, const IntervalSet& v) {
  std::vector<Interval> all = u.intervals();
  all.insert(all.end(), v.intervals().begin(), v.intervals().end());
  return IntervalSet::normalize(std::move(all));
}

/// Points of `within` that are not in u.
inline IntervalSet difference(const IntervalSet& within, const IntervalSet& u) {
  std::vector<Interval> out;
  for (const auto& piece : within.intervals()) {
    Rational cursor = piece.lo;
    for (const auto& cut : u.intervals()) {
      if (cut.hi <= cursor) continue;
      if (cut.lo >= piece.hi) break;
      if (cursor < cut.lo) out.push_back({cursor, cut.lo});
      cursor = std::max(cursor, cut.hi);
      if (cursor >= piece.hi) break;
    }
    if (cursor < piece.hi) out.push_back({cursor, piece.hi});
  }
  return IntervalSet::normalize(std::move(out));
}

/// Sum of lengths.
inline Rational lebesgue(const IntervalSet& u) {
  Rational total = 0;
  for (const auto& iv : u.intervals()) total += iv.length();
  return total;
}

/// Either the bounded ambient (0, T], or all bounded sets of the real line.
class AmbientSpec {
 public:
  enum class Mode { bounded, unbounded };

  static AmbientSpec bounded(Rational length) {
    if (!(length > 0)) throw precondition_violation("ambient length must be positive");
    return AmbientSpec(Mode::bounded, std::move(length));
  }
  static AmbientSpec unbounded() { return AmbientSpec(Mode::unbounded, 0); }

  Mode mode() const { return mode_; }
  bool is_bounded() const { return mode_ == Mode::bounded; }
  const Rational& length() const {
    if (!is_bounded()) throw precondition_violation("unbounded ambient has no length");
    return length_;
  }
  IntervalSet whole() const { return IntervalSet::single(0, length()); }

  friend bool operator==(const AmbientSpec&, const AmbientSpec&) = default;

 private:
  AmbientSpec(Mode m, Rational t) : mode_(m), length_(std::move(t)) {}

  Mode mode_;
  Rational length_;
};

/// Positive piecewise-constant density on (0, T]: value[j] on
/// (breakpoint[j], breakpoint[j+1]].
class StepDensity {
 public:
  StepDensity(std::vector<Rational> breakpoints, std::vector<Rational> values)
      : breaks_(std::move(breakpoints)), values_(std::move(values)) {
    if (breaks_.size() < 2 || values_.size() + 1 != breaks_.size())
      throw precondition_violation("step density needs k+1 breakpoints for k values");
    if (breaks_.front() != 0) throw precondition_violation("step density breakpoints must start at 0");
    for (std::size_t i = 1; i < breaks_.size(); ++i)
      if (!(breaks_[i - 1] < breaks_[i])) throw precondition_violation("step density breakpoints must increase strictly");
    for (const auto& v : values_)
      if (!(v > 0)) throw precondition_violation("step density values must be positive");
  }

  /// f == 1 on (0, T]: nu coincides with Lebesgue measure.
  static StepDensity unit(const Rational& length) { return StepDensity({0, length}, {1}); }

  const std::vector<Rational>& breakpoints() const { return breaks_; }
  const std::vector<Rational>& values() const { return values_; }
  std::size_t pieces() const { return values_.size(); }
  const Rational& length() const { return breaks_.back(); }
  IntervalSet piece(std::size_t j) const { return IntervalSet::single(breaks_[j], breaks_[j + 1]); }

  Rational total() const {
    Rational t = 0;
    for (std::size_t j = 0; j < values_.size(); ++j) t += values_[j] * (breaks_[j + 1] - breaks_[j]);
    return t;
  }

  /// Density value on the piece containing the half-open cell ending at t.
  const Rational& value_left_of(const Rational& t) const {
    for (std::size_t j = 0; j < values_.size(); ++j)
      if (t <= breaks_[j + 1]) return values_[j];
    throw ambient_mismatch("point " + to_string(t) + " beyond the density support");
  }

  /// nu(u) = sum_j f_j * |u n piece_j|. u must lie in (0, T].
  Rational nu(const IntervalSet& u) const {
    if (!u.empty() && (*u.inf() < 0 || *u.sup() > length()))
      throw ambient_mismatch("set " + format(u) + " leaves the density support (0," + to_string(length()) + "]");
    Rational total = 0;
    for (const auto& iv : u.intervals())
      for (std::size_t j = 0; j < values_.size(); ++j) {
        const Rational& lo = std::max(iv.lo, breaks_[j]);
        const Rational& hi = std::min(iv.hi, breaks_[j + 1]);
        if (lo < hi) total += values_[j] * (hi - lo);
      }
    return total;
  }

  /// nu((0, t]).
  Rational cumulative(const Rational& t) const {
    if (t <= 0) return 0;
    return nu(IntervalSet::single(0, std::min(t, length())));
  }

  /// The unique t in [0, T] with cumulative(t) == y.
  Rational inverse_cumulative(const Rational& y) const {
    if (y < 0 || y > total()) throw precondition_violation("mass " + to_string(y) + " outside [0, total]");
    Rational acc = 0;
    for (std::size_t j = 0; j < values_.size(); ++j) {
      Rational piece_mass = values_[j] * (breaks_[j + 1] - breaks_[j]);
      if (y <= acc + piece_mass) return breaks_[j] + (y - acc) / values_[j];
      acc += piece_mass;
    }
    return length();
  }

  friend bool operator==(const StepDensity&, const StepDensity&) = default;

 private:
  std::vector<Rational> breaks_;
  std::vector<Rational> values_;
};

/// Continuous piecewise-affine function on [lo, hi]; piece i holds
/// slope * x + intercept on [start_i, end_i].
class PiecewiseLinearProfile {
 public:
  struct Piece {
    Rational start;
    Rational end;
    Rational slope;
    Rational intercept;

    Rational at(const Rational& x) const { return slope * x + intercept; }
  };

  explicit PiecewiseLinearProfile(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw precondition_violation("empty profile");
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      if (!(pieces_[i].start < pieces_[i].end)) throw precondition_violation("profile piece of zero width");
      if (i > 0 && pieces_[i - 1].end != pieces_[i].start) throw precondition_violation("profile pieces not contiguous");
    }
  }

  const std::vector<Piece>& pieces() const { return pieces_; }
  const Rational& domain_lo() const { return pieces_.front().start; }
  const Rational& domain_hi() const { return pieces_.back().end; }

  std::vector<Rational> breakpoints() const {
    std::vector<Rational> out{domain_lo()};
    for (const auto& p : pieces_) out.push_back(p.end);
    return out;
  }

  Rational operator()(const Rational& x) const {
    if (x < domain_lo() || x > domain_hi()) throw precondition_violation("profile evaluated outside its domain");
    for (const auto& p : pieces_)
      if (x <= p.end) return p.at(x);
    return pieces_.back().at(x);
  }

  bool continuous() const {
    for (std::size_t i = 1; i < pieces_.size(); ++i)
      if (pieces_[i - 1].at(pieces_[i].start) != pieces_[i].at(pieces_[i].start)) return false;
    return true;
  }

  bool weakly_increasing() const {
    return std::all_of(pieces_.begin(), pieces_.end(), [](const Piece& p) { return p.slope >= 0; });
  }

  /// Largest |slope|.
  Rational lipschitz_constant() const {
    Rational worst = 0;
    for (const auto& p : pieces_) worst = std::max(worst, abs(p.slope));
    return worst;
  }

  Rational rise() const { return (*this)(domain_hi()) - (*this)(domain_lo()); }

  /// Least x with f(x) == c, for a continuous weakly increasing profile.
  std::optional<Rational> first_reaching(const Rational& c) const {
    if (c < (*this)(domain_lo()) || c > (*this)(domain_hi())) return std::nullopt;
    for (const auto& p : pieces_) {
      const Rational lo_val = p.at(p.start);
      if (lo_val == c) return p.start;
      const Rational hi_val = p.at(p.end);
      if (lo_val < c && c <= hi_val) return p.start + (c - lo_val) / p.slope;
    }
    return std::nullopt;
  }

 private:
  std::vector<Piece> pieces_;
};

/// Finite unions of half-open intervals ordered by inclusion (up to null
/// sets), graded by Lebesgue measure. Bounded mode lives in (0, T]; the
/// unbounded mode has no top until adjoin_bounds supplies one.
class IntervalLattice {
 public:
  using element_type = IntervalSet;

  explicit IntervalLattice(AmbientSpec ambient) : ambient_(std::move(ambient)) {}

  static IntervalLattice bounded(const Rational& length) { return IntervalLattice(AmbientSpec::bounded(length)); }
  static IntervalLattice unbounded() { return IntervalLattice(AmbientSpec::unbounded()); }

  const AmbientSpec& ambient() const { return ambient_; }

  /// Canonicalizes and checks the endpoints against the ambient.
  IntervalSet normalize(std::vector<Interval> raw) const {
    IntervalSet u = IntervalSet::normalize(std::move(raw));
    check(u);
    return u;
  }

  IntervalSet meet(const IntervalSet& u, const IntervalSet& v) const { return intersect(u, v); }
  IntervalSet join(const IntervalSet& u, const IntervalSet& v) const { return unite(u, v); }

  IntervalSet complement(const IntervalSet& u) const {
    if (!ambient_.is_bounded()) throw ambient_mismatch("complement needs a bounded ambient");
    check(u);
    return difference(ambient_.whole(), u);
  }

  Rank rank(const IntervalSet& u) const { return Rank(lebesgue(u)); }
  std::optional<IntervalSet> bottom() const { return IntervalSet{}; }
  std::optional<IntervalSet> top() const {
    if (!ambient_.is_bounded()) return std::nullopt;
    return ambient_.whole();
  }
  std::string format(const IntervalSet& u) const { return rgl::format(u); }

  bool contains(const IntervalSet& u) const {
    return !ambient_.is_bounded() || u.empty() || (*u.inf() >= 0 && *u.sup() <= ambient_.length());
  }

  /// Bounded: the prefix (0, lambda]. Unbounded: the centred (-lambda/2, lambda/2].
  /// Either way the element has Lebesgue measure lambda.
  IntervalSet chief_element(const Rational& lambda) const {
    if (ambient_.is_bounded()) {
      if (lambda < 0 || lambda > ambient_.length())
        throw precondition_violation("chief parameter " + to_string(lambda) + " outside [0, " + to_string(ambient_.length()) + "]");
      return IntervalSet::single(0, lambda);
    }
    if (lambda < 0) throw precondition_violation("chief parameter must be nonnegative");
    return IntervalSet::single(-lambda / 2, lambda / 2);
  }

  friend bool operator==(const IntervalLattice&, const IntervalLattice&) = default;

 private:
  void check(const IntervalSet& u) const {
    if (!contains(u)) throw ambient_mismatch("set " + rgl::format(u) + " leaves the ambient (0," + to_string(ambient_.length()) + "]");
  }

  AmbientSpec ambient_;
};

namespace detail {

/// Cut points for profiles of z: 0, T, z's endpoints and the density breaks.
inline std::vector<Rational> profile_cuts(const IntervalSet& z, const StepDensity& f) {
  std::vector<Rational> cuts = f.breakpoints();
  for (const auto& iv : z.intervals()) {
    cuts.push_back(iv.lo);
    cuts.push_back(iv.hi);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

inline bool cell_inside(const IntervalSet& z, const Rational& a, const Rational& b) {
  for (const auto& iv : z.intervals())
    if (iv.lo <= a && b <= iv.hi) return true;
  return false;
}

inline PiecewiseLinearProfile build_profile(const IntervalLattice& l, const IntervalSet& z, const StepDensity& f,
                                            Side side) {
  if (!l.ambient().is_bounded()) throw ambient_mismatch("profiles need a bounded ambient");
  if (f.length() != l.ambient().length()) throw ambient_mismatch("density support differs from the ambient");
  if (!l.contains(z)) throw ambient_mismatch("set " + format(z) + " leaves the ambient");
  const auto cuts = profile_cuts(z, f);
  std::vector<PiecewiseLinearProfile::Piece> pieces;
  Rational value = side == Side::meet ? Rational(0) : f.nu(z);
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    const Rational& a = cuts[i - 1];
    const Rational& b = cuts[i];
    const bool inside = cell_inside(z, a, b);
    const bool grows = side == Side::meet ? inside : !inside;
    Rational slope = grows ? f.value_left_of(b) : Rational(0);
    pieces.push_back({a, b, slope, value - slope * a});
    value += slope * (b - a);
  }
  return PiecewiseLinearProfile(std::move(pieces));
}

}  // namespace detail

/// lambda -> grading(z ^ (0, lambda]) on [0, T].
inline PiecewiseLinearProfile meet_profile(const IntervalLattice& l, const IntervalSet& z, const StepDensity& f) {
  return detail::build_profile(l, z, f, Side::meet);
}

/// lambda -> grading(z v (0, lambda]) on [0, T].
inline PiecewiseLinearProfile join_profile(const IntervalLattice& l, const IntervalSet& z, const StepDensity& f) {
  return detail::build_profile(l, z, f, Side::join);
}

inline PiecewiseLinearProfile meet_profile(const IntervalLattice& l, const IntervalSet& z) {
  return meet_profile(l, z, StepDensity::unit(l.ambient().length()));
}
inline PiecewiseLinearProfile join_profile(const IntervalLattice& l, const IntervalSet& z) {
  return join_profile(l, z, StepDensity::unit(l.ambient().length()));
}

struct ScanRow {
  Rational parameter;
  Rank value;
};

/// Chain (1, 1+kappa] against the centred chief chain, both met with y, in
/// the lattice of bounded sets of the real line.
struct BoundedChainReport {
  std::vector<ScanRow> chain_scan;
  Rank chain_sup;
  std::vector<ScanRow> chief_scan;
  Rank chief_sup;
  Rank target;  // rho(y)

  bool chain_reaches_target() const { return chain_sup == target; }
  bool chief_reaches_target() const { return chief_sup == target; }
};

inline BoundedChainReport bounded_chain_demo(const std::vector<Rational>& kappas, const std::vector<Rational>& lambdas,
                                             const IntervalSet& y = IntervalSet::single(-1, 1)) {
  const IntervalLattice l = IntervalLattice::unbounded();
  BoundedChainReport rep;
  rep.chain_sup = Rank(0);
  rep.chief_sup = Rank(0);
  rep.target = l.rank(y);
  for (const auto& k : kappas) {
    if (k < 0) throw precondition_violation("chain parameter must be nonnegative");
    Rank r = l.rank(l.meet(IntervalSet::single(1, 1 + k), y));
    rep.chain_scan.push_back({k, r});
    rep.chain_sup = max(rep.chain_sup, r);
  }
  for (const auto& lam : lambdas) {
    Rank r = l.rank(l.meet(l.chief_element(lam), y));
    rep.chief_scan.push_back({lam, r});
    rep.chief_sup = max(rep.chief_sup, r);
  }
  return rep;
}

}  // namespace rgl
