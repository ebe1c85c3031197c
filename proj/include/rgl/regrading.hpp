#pragma once

// Regrading a rank-supersolvable lattice so that a given antichain cutset
// becomes a level set. Each element z is projected along its good chain
// {z ^ m_lambda} u {z v m_lambda} onto the cutset, giving alpha(z), and
// sigma(z) = rho(z) - rho(alpha(z)).

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rgl/errors.hpp"
#include "rgl/finite/finite.hpp"
#include "rgl/interval.hpp"
#include "rgl/lattice.hpp"

namespace rgl {

/// The cutset {u : nu(u) = value} for the density grading nu.
struct LevelSetCutset {
  StepDensity grading;
  Rational value;
};

/// A finite antichain given by its members.
template <class E>
struct ExplicitAntichain {
  std::vector<E> elements;
};

template <class E>
struct GoodChainPoint {
  Side side;
  Rank lambda;
  E element;
};

/// alpha(z) with the least chief parameter producing it.
template <class E>
struct ProjectionResult {
  E alpha;
  Rank lambda_star;
  Side side;
};

/// Affine map sending [lo, hi] onto `target`; rank modularity survives it.
inline Rank affine_rescale(const Rank& s, const Rank& lo, const Rank& hi, const RankInterval& target) {
  if (!target.bounded()) throw precondition_violation("rescale target must be bounded");
  if (!(lo < hi)) throw precondition_violation("degenerate sigma range");
  Rational t = (s.value() - lo.value()) / (hi.value() - lo.value());
  return Rank(target.lo.value() + t * (target.hi.value() - target.lo.value()));
}

/// Regrading on the bounded interval lattice (0, T] with chief chain
/// m_lambda = (0, lambda] and a density level-set cutset. Every step is an
/// exact piecewise-linear computation.
class IntervalRegrader {
 public:
  using lattice_type = IntervalLattice;
  using element_type = IntervalSet;

  IntervalRegrader(IntervalLattice lattice, LevelSetCutset cutset)
      : lattice_(std::move(lattice)), cutset_(std::move(cutset)) {
    if (!lattice_.ambient().is_bounded()) throw precondition_violation("regrading needs a bounded ambient");
    if (cutset_.grading.length() != lattice_.ambient().length())
      throw ambient_mismatch("cutset density support differs from the ambient");
    if (!(cutset_.value > 0) || !(cutset_.value < cutset_.grading.total()))
      throw invalid_cutset("level " + to_string(cutset_.value) + " outside the open range (0, " +
                           to_string(cutset_.grading.total()) + "); the level set is not an antichain cutset");
  }

  const IntervalLattice& lattice() const { return lattice_; }
  const LevelSetCutset& cutset() const { return cutset_; }
  const Rational& length() const { return lattice_.ambient().length(); }

  IntervalSet chief(const Rational& lambda) const { return lattice_.chief_element(lambda); }

  bool in_cutset(const IntervalSet& u) const { return cutset_.grading.nu(u) == cutset_.value; }

  GoodChainPoint<IntervalSet> good_chain_eval(const IntervalSet& z, const Rank& lambda, Side side) const {
    if (!lambda.is_finite() || lambda.value() < 0 || lambda.value() > length())
      throw precondition_violation("lambda " + lambda.str() + " outside [0, " + to_string(length()) + "]");
    check(z);
    return {side, lambda, apply(lattice_, side, z, chief(lambda.value()))};
  }

  /// Meet side when nu(z) >= c, join side otherwise; lambda* is the least
  /// root of the corresponding nu-profile.
  ProjectionResult<IntervalSet> project(const IntervalSet& z) const {
    check(z);
    const Rational& c = cutset_.value;
    const Side side = cutset_.grading.nu(z) >= c ? Side::meet : Side::join;
    const auto profile = side == Side::meet ? meet_profile(lattice_, z, cutset_.grading)
                                            : join_profile(lattice_, z, cutset_.grading);
    const auto lambda = profile.first_reaching(c);
    if (!lambda) throw std::logic_error("good chain of " + format(z) + " misses the cutset");
    IntervalSet alpha = apply(lattice_, side, z, chief(*lambda));
    if (!in_cutset(alpha)) throw std::logic_error("projection of " + format(z) + " left the cutset");
    return {std::move(alpha), Rank(*lambda), side};
  }

  Rank sigma(const IntervalSet& z) const { return lattice_.rank(z) - lattice_.rank(project(z).alpha); }

  Rank sigma_bottom() const { return sigma(IntervalSet{}); }
  Rank sigma_top() const { return sigma(lattice_.ambient().whole()); }

  /// sigma composed with the affine map onto `target`.
  Rank rescaled_sigma(const IntervalSet& z, const RankInterval& target) const {
    return affine_rescale(sigma(z), sigma_bottom(), sigma_top(), target);
  }

  /// The element of Lebesgue measure t on the good chain through `seed`.
  GoodChainPoint<IntervalSet> good_chain_at_rank(const IntervalSet& seed, const Rational& t) const {
    check(seed);
    if (t < 0 || t > length()) throw precondition_violation("rank " + to_string(t) + " outside the grading range");
    const Side side = t <= lebesgue(seed) ? Side::meet : Side::join;
    const auto profile = side == Side::meet ? rgl::meet_profile(lattice_, seed) : rgl::join_profile(lattice_, seed);
    const auto lambda = profile.first_reaching(t);
    if (!lambda) throw std::logic_error("good chain of " + format(seed) + " skips rank " + to_string(t));
    return {side, Rank(*lambda), apply(lattice_, side, seed, chief(*lambda))};
  }

 private:
  void check(const IntervalSet& z) const {
    if (!lattice_.contains(z)) throw ambient_mismatch("set " + format(z) + " leaves the ambient");
  }

  IntervalLattice lattice_;
  LevelSetCutset cutset_;
};

/// Regrading on a small finite lattice with its family chief chain and an
/// explicit antichain cutset, checked exhaustively.
template <ChiefFiniteLattice L>
class FiniteRegrader {
 public:
  using lattice_type = L;
  using element_type = element_t<L>;
  using E = element_type;

  FiniteRegrader(L lattice, ExplicitAntichain<E> cutset)
      : lattice_(std::move(lattice)), cutset_(std::move(cutset)), chief_(chief_chain(lattice_)) {
    const auto& a = cutset_.elements;
    if (a.empty()) throw invalid_cutset("empty antichain");
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j)
        if (comparable(lattice_, a[i], a[j]))
          throw invalid_cutset("not an antichain: " + lattice_.format(a[i]) + " and " + lattice_.format(a[j]) +
                               " are comparable");
    for (const auto& chain : enumerate_maximal_chains(lattice_)) {
      bool hit = false;
      for (const auto& c : chain) hit = hit || in_cutset(c);
      if (!hit) throw invalid_cutset("a maximal chain through " + lattice_.format(chain[1]) + " misses the antichain");
    }
  }

  const L& lattice() const { return lattice_; }
  const ExplicitAntichain<E>& cutset() const { return cutset_; }
  const ChainSample<E>& chief() const { return chief_; }

  bool in_cutset(const E& x) const {
    return std::any_of(cutset_.elements.begin(), cutset_.elements.end(), [&](const E& a) { return a == x; });
  }

  GoodChainPoint<E> good_chain_eval(const E& z, const Rank& lambda, Side side) const {
    for (const auto& p : chief_)
      if (p.rank == lambda) return {side, lambda, apply(lattice_, side, z, p.element)};
    throw precondition_violation("no chief element of rank " + lambda.str());
  }

  /// {z ^ m_i} u {z v m_i}, deduplicated, in increasing rank.
  std::vector<E> good_chain(const E& z) const {
    std::vector<E> out;
    auto push = [&](E e) {
      if (std::none_of(out.begin(), out.end(), [&](const E& o) { return o == e; })) out.push_back(std::move(e));
    };
    for (const auto& p : chief_) push(lattice_.meet(z, p.element));
    for (const auto& p : chief_) push(lattice_.join(z, p.element));
    std::sort(out.begin(), out.end(), [&](const E& a, const E& b) { return Rank(lattice_.rank(a)) < Rank(lattice_.rank(b)); });
    return out;
  }

  ProjectionResult<E> project(const E& z) const {
    std::optional<E> hit;
    for (const auto& g : good_chain(z)) {
      if (!in_cutset(g)) continue;
      if (hit) throw invalid_cutset("good chain of " + lattice_.format(z) + " meets the cutset twice");
      hit = g;
    }
    if (!hit) throw invalid_cutset("good chain of " + lattice_.format(z) + " misses the cutset");
    const Side side = leq(lattice_, *hit, z) ? Side::meet : Side::join;
    for (const auto& p : chief_)
      if (apply(lattice_, side, z, p.element) == *hit) return {*hit, p.rank, side};
    throw std::logic_error("projection not on the good chain");
  }

  Rank sigma(const E& z) const { return Rank(lattice_.rank(z)) - Rank(lattice_.rank(project(z).alpha)); }
  Rank sigma_bottom() const { return sigma(*lattice_.bottom()); }
  Rank sigma_top() const { return sigma(*lattice_.top()); }

 private:
  L lattice_;
  ExplicitAntichain<E> cutset_;
  ChainSample<E> chief_;
};

template <class R>
concept Regrader = requires(const R& r, const typename R::element_type& z) {
  typename R::lattice_type;
  { r.lattice() } -> std::convertible_to<const typename R::lattice_type&>;
  { r.project(z) } -> std::convertible_to<ProjectionResult<typename R::element_type>>;
  { r.sigma(z) } -> std::convertible_to<Rank>;
};

template <Regrader R>
Rank sigma_eval(const R& r, const typename R::element_type& z) {
  return r.sigma(z);
}

template <Regrader R>
ProjectionResult<typename R::element_type> project_alpha(const R& r, const typename R::element_type& z) {
  return r.project(z);
}

/// The lattice of R with sigma as its rank.
template <Regrader R>
auto sigma_graded(const R& r) {
  auto grading = [&r](const typename R::element_type& x) { return r.sigma(x); };
  return Regraded<typename R::lattice_type, decltype(grading)>(r.lattice(), grading);
}

/// sigma(m v x) + sigma(m ^ x) - sigma(m) - sigma(x).
template <Regrader R>
Rank sigma_rank_modular_defect(const R& r, const typename R::element_type& m, const typename R::element_type& x) {
  return rank_modular_defect(sigma_graded(r), m, x);
}

struct CheckReport {
  bool pass = true;
  std::size_t checked = 0;
  std::optional<std::string> witness;

  void fail(std::string w) {
    if (pass) witness = std::move(w);
    pass = false;
  }
};

/// sigma(w) < sigma(z) for every supplied pair w < z.
template <Regrader R>
CheckReport sigma_monotone_check(const R& r,
                                 const std::vector<std::pair<typename R::element_type, typename R::element_type>>& pairs) {
  const auto& l = r.lattice();
  CheckReport rep;
  for (const auto& [w, z] : pairs) {
    if (!less(l, w, z)) throw precondition_violation("pair not strictly comparable: " + l.format(w) + " , " + l.format(z));
    ++rep.checked;
    Rank sw = r.sigma(w), sz = r.sigma(z);
    if (!(sw < sz)) rep.fail("sigma(" + l.format(w) + ")=" + sw.str() + " >= sigma(" + l.format(z) + ")=" + sz.str());
  }
  return rep;
}

struct AlphaOrderReport {
  bool pass;
  Rank lambda_w;
  Rank lambda_z;
  bool alphas_equal;
};

/// For w < z on or above the cutset: lambda*(w) > lambda*(z) or alpha(w) == alpha(z).
template <Regrader R>
AlphaOrderReport alpha_order_check(const R& r, const typename R::element_type& w, const typename R::element_type& z) {
  const auto& l = r.lattice();
  if (!leq(l, w, z)) throw precondition_violation("alpha order check needs w <= z");
  const auto pw = r.project(w);
  const auto pz = r.project(z);
  if (pw.side != Side::meet || pz.side != Side::meet)
    throw precondition_violation("alpha order check needs both elements on or above the cutset");
  const bool equal = pw.alpha == pz.alpha;
  return {pw.lambda_star > pz.lambda_star || equal, pw.lambda_star, pz.lambda_star, equal};
}

template <class E>
struct RegradeRow {
  Rational rho;      // grid point = rank of the chain element
  Rank lambda;       // chief parameter reaching the element
  Side side;
  E element;
  E alpha;
  Rank sigma;
};

/// Which maximal chain a table walks: the chief chain or the good chain
/// through a seed.
struct ChainSpec {
  std::optional<IntervalSet> seed;  // nullopt: the chief chain

  static ChainSpec chief() { return {}; }
  static ChainSpec good_chain(IntervalSet s) { return {std::move(s)}; }
};

/// sigma sampled along a maximal chain at ranks 0, step, 2*step, ..., T.
inline std::vector<RegradeRow<IntervalSet>> regrade_table(const IntervalRegrader& r, const ChainSpec& chain,
                                                          const Rational& step) {
  if (!(step > 0)) throw precondition_violation("grid step must be positive");
  std::vector<Rational> grid;
  for (Rational t = 0; t < r.length(); t += step) grid.push_back(t);
  grid.push_back(r.length());
  std::vector<RegradeRow<IntervalSet>> rows;
  for (const auto& t : grid) {
    GoodChainPoint<IntervalSet> pt = chain.seed ? r.good_chain_at_rank(*chain.seed, t)
                                                : GoodChainPoint<IntervalSet>{Side::meet, Rank(t), r.chief(t)};
    const auto proj = r.project(pt.element);
    Rank s = r.lattice().rank(pt.element) - r.lattice().rank(proj.alpha);
    rows.push_back({t, pt.lambda, pt.side, pt.element, proj.alpha, s});
  }
  return rows;
}

template <class E>
bool sigma_strictly_increasing(const std::vector<RegradeRow<E>>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (!(rows[i - 1].sigma < rows[i].sigma)) return false;
  return true;
}

template <class E>
Rational max_sigma_gap(const std::vector<RegradeRow<E>>& rows) {
  Rational gap = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) gap = std::max(gap, (rows[i].sigma - rows[i - 1].sigma).value());
  return gap;
}

struct ChainCheck {
  bool pass = true;
  std::optional<std::string> witness;
};

/// The good chain through z covers every grading value: its meet and join
/// profiles are continuous and weakly increasing, run from grading(bottom)
/// to grading(z) and from grading(z) to grading(top), and agree with direct
/// evaluation on the grid.
inline ChainCheck good_chain_maximality_check(const IntervalLattice& l, const IntervalSet& z, const StepDensity& f,
                                              const Rational& grid_step) {
  ChainCheck rep;
  auto fail = [&](std::string w) {
    rep.pass = false;
    if (!rep.witness) rep.witness = std::move(w);
  };
  const auto meet = meet_profile(l, z, f);
  const auto join = join_profile(l, z, f);
  const Rational T = l.ambient().length();
  if (!meet.continuous() || !join.continuous()) fail("profile discontinuous");
  if (!meet.weakly_increasing() || !join.weakly_increasing()) fail("profile decreasing");
  if (meet(0) != 0) fail("meet profile does not start at grading(bottom)");
  if (meet(T) != f.nu(z) || join(0) != f.nu(z)) fail("profiles do not meet at grading(z)");
  if (join(T) != f.total()) fail("join profile does not end at grading(top)");
  if (grid_step > 0) {
    for (Rational t = 0; t <= T; t += grid_step) {
      const IntervalSet m = l.chief_element(t);
      if (meet(t) != f.nu(l.meet(z, m)) || join(t) != f.nu(l.join(z, m)))
        fail("profile disagrees with direct evaluation at lambda=" + to_string(t));
    }
  }
  return rep;
}

/// Finite case: the good chain is saturated.
template <ChiefFiniteLattice L>
ChainCheck good_chain_maximality_check(const FiniteRegrader<L>& r, const element_t<L>& z) {
  ChainCheck rep;
  if (!is_saturated_chain(r.lattice(), r.good_chain(z))) {
    rep.pass = false;
    rep.witness = "good chain of " + r.lattice().format(z) + " is not saturated";
  }
  return rep;
}

/// {m ^ c} u {m v c} over a sampled maximal chain c is again a chain from
/// bottom to top whose rank steps never exceed the chain's own steps.
/// For a saturated finite chain this is saturation.
template <GradedLattice L>
ChainCheck reversed_chain_check(const L& l, const element_t<L>& m, const ChainSample<element_t<L>>& chain) {
  using E = element_t<L>;
  ChainCheck rep;
  auto fail = [&](std::string w) {
    rep.pass = false;
    if (!rep.witness) rep.witness = std::move(w);
  };
  if (chain.size() < 2) throw precondition_violation("chain sample too short");
  if (!(chain[0].element == *l.bottom()) || !(chain[chain.size() - 1].element == *l.top()))
    throw precondition_violation("chain sample must run from bottom to top");
  Rank max_step = 0;
  for (std::size_t i = 1; i < chain.size(); ++i) max_step = max(max_step, chain[i].rank - chain[i - 1].rank);
  std::vector<E> reversed;
  for (const auto& p : chain) reversed.push_back(l.meet(m, p.element));
  for (const auto& p : chain) reversed.push_back(l.join(m, p.element));
  std::vector<E> distinct;
  for (auto& e : reversed)
    if (distinct.empty() || !(distinct.back() == e)) distinct.push_back(std::move(e));
  for (std::size_t i = 1; i < distinct.size(); ++i) {
    if (!less(l, distinct[i - 1], distinct[i])) {
      fail("not a chain at " + l.format(distinct[i - 1]) + " , " + l.format(distinct[i]));
      continue;
    }
    Rank gap = Rank(l.rank(distinct[i])) - Rank(l.rank(distinct[i - 1]));
    if (gap > max_step) fail("rank gap " + gap.str() + " above " + l.format(distinct[i - 1]));
  }
  if (!(distinct.front() == *l.bottom()) || !(distinct.back() == *l.top())) fail("reversed chain misses an extremum");
  return rep;
}

/// One of the four continuity-at-infinity conditions.
struct HypothesisCondition {
  std::string name;
  bool vacuous = false;  // the grading range is bounded on that side
  bool holds = true;
  std::optional<std::string> witness;
};

struct HypothesisReport {
  std::vector<HypothesisCondition> conditions;  // sup-meet-chain, inf-join-chain, sup-meet-chief, inf-join-chief

  bool all_hold() const {
    return std::all_of(conditions.begin(), conditions.end(), [](const auto& c) { return c.holds; });
  }
  std::vector<std::string> failing() const {
    std::vector<std::string> out;
    for (const auto& c : conditions)
      if (!c.holds) out.push_back(c.name);
    return out;
  }
};

/// Samples for the continuity checks. `chain` and `chief` are increasing
/// samples of finite rank that run out towards the infinite ends; `anchors`
/// are chief elements m_{lambda0}; `probes` are arbitrary elements z.
template <class E>
struct HypothesisSamples {
  std::vector<E> chain;
  std::vector<E> chief;
  std::vector<E> anchors;
  std::vector<E> probes;
};

/// The four sup/inf conditions, checked through monotone limits: an
/// increasing family below a target has supremum equal to it iff the ranks
/// climb to the target's rank (dually for infima). A side where the grading
/// range is bounded is reported as vacuously satisfied.
template <GradedLattice L>
HypothesisReport main_ext_hypothesis_check(const L& l, const HypothesisSamples<element_t<L>>& s) {
  using E = element_t<L>;
  const auto top = l.top();
  const auto bottom = l.bottom();
  const bool bounded_above = top && Rank(l.rank(*top)).is_finite();
  const bool bounded_below = bottom && Rank(l.rank(*bottom)).is_finite();

  auto check_sup = [&](const std::string& name, const std::vector<E>& family_src, const std::vector<E>& targets) {
    HypothesisCondition c{name, bounded_above, true, std::nullopt};
    if (c.vacuous) return c;
    for (const auto& target : targets) {
      Rank best = Rank::neg_infinity();
      for (const auto& x : family_src) best = max(best, Rank(l.rank(l.meet(target, x))));
      if (best != Rank(l.rank(target))) {
        c.holds = false;
        c.witness = "sup of meets with " + l.format(target) + " reaches rank " + best.str() + ", not " +
                    Rank(l.rank(target)).str();
        break;
      }
    }
    return c;
  };
  auto check_inf = [&](const std::string& name, const std::vector<E>& family_src, const std::vector<E>& targets) {
    HypothesisCondition c{name, bounded_below, true, std::nullopt};
    if (c.vacuous) return c;
    for (const auto& target : targets) {
      Rank best = Rank::infinity();
      for (const auto& x : family_src) best = min(best, Rank(l.rank(l.join(target, x))));
      if (best != Rank(l.rank(target))) {
        c.holds = false;
        c.witness = "inf of joins with " + l.format(target) + " reaches rank " + best.str() + ", not " +
                    Rank(l.rank(target)).str();
        break;
      }
    }
    return c;
  };

  HypothesisReport rep;
  rep.conditions.push_back(check_sup("sup m ^ c = m", s.chain, s.anchors));
  rep.conditions.push_back(check_inf("inf m v c = m", s.chain, s.anchors));
  rep.conditions.push_back(check_sup("sup m_lambda ^ z = z", s.chief, s.probes));
  rep.conditions.push_back(check_inf("inf m_lambda v z = z", s.chief, s.probes));
  return rep;
}

/// One antichain cutset in the finite cross-check.
struct FiniteCutsetCheck {
  std::string cutset;
  std::vector<Rank> values;  // sigma along the first maximal chain
  bool zero_level_set = true;
  bool chains_agree = true;
  std::optional<std::string> witness;

  bool pass() const { return zero_level_set && chains_agree; }
};

struct FiniteCrosscheckReport {
  std::vector<FiniteCutsetCheck> cutsets;
  std::size_t chains = 0;

  bool pass() const {
    return std::all_of(cutsets.begin(), cutsets.end(), [](const auto& c) { return c.pass(); });
  }
};

/// For every antichain cutset A of l: sigma is zero exactly on A, and along
/// every maximal chain it runs strictly increasing through the same value
/// list, which is also the set of all sigma values.
template <ChiefFiniteLattice L>
FiniteCrosscheckReport finite_regrading_crosscheck(const L& l) {
  using E = element_t<L>;
  FiniteIndex<L> idx(l);
  const auto chains = idx.maximal_chains();
  FiniteCrosscheckReport rep;
  rep.chains = chains.size();
  for (auto mask : antichain_cutset_masks(idx)) {
    ExplicitAntichain<E> a;
    for (std::size_t i = 0; i < idx.size(); ++i)
      if (mask >> i & 1) a.elements.push_back(idx[i]);
    FiniteCutsetCheck row;
    for (std::size_t i = 0; i < a.elements.size(); ++i)
      row.cutset += (i ? " " : "") + l.format(a.elements[i]);
    const FiniteRegrader<L> r(l, a);
    std::vector<Rank> sigma;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      sigma.push_back(r.sigma(idx[i]));
      if ((sigma.back() == Rank(0)) != bool(mask >> i & 1)) {
        row.zero_level_set = false;
        if (!row.witness) row.witness = "sigma(" + l.format(idx[i]) + ") = " + sigma.back().str();
      }
    }
    std::vector<Rank> all = sigma;
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (auto i : chains.front()) row.values.push_back(sigma[i]);
    if (row.values != all) {
      row.chains_agree = false;
      if (!row.witness) row.witness = "first chain misses some sigma value";
    }
    for (const auto& chain : chains) {
      std::vector<Rank> vals;
      for (auto i : chain) vals.push_back(sigma[i]);
      if (vals != row.values) {
        row.chains_agree = false;
        if (!row.witness) row.witness = "chain through " + l.format(idx[chain[1]]) + " has a different sigma profile";
      }
    }
    rep.cutsets.push_back(std::move(row));
  }
  return rep;
}

}  // namespace rgl
