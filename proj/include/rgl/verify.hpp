#pragma once

// Property suites run by `rgl verify`. Each suite is deterministic given the
// config; suites run in a fixed order.

#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rgl/direct_limit.hpp"
#include "rgl/errors.hpp"
#include "rgl/finite/boolean.hpp"
#include "rgl/finite/caps.hpp"
#include "rgl/finite/finite.hpp"
#include "rgl/finite/partition.hpp"
#include "rgl/finite/product_plane.hpp"
#include "rgl/finite/subspace.hpp"
#include "rgl/interval.hpp"
#include "rgl/lattice.hpp"
#include "rgl/regrading.hpp"
#include "rgl/sampling.hpp"

namespace rgl {

/// f = 1 on (0,1], 2 on (1,2].
inline StepDensity two_step_density() { return StepDensity({0, 1, 2}, {1, 2}); }

/// Ambient (0,2] with the two-step density and the cutset nu = 1.
inline IntervalRegrader two_step_regrader() {
  return IntervalRegrader(IntervalLattice::bounded(2), {two_step_density(), 1});
}

struct CounterexampleReport {
  std::vector<std::pair<IntervalSet, Rank>> sigma;  // (0,1], (0,5/4], (0,3/2], (0,2], (1,2], {}
  Rank defect;                                      // of (0,1] against (1,2]
};

inline CounterexampleReport counterexample(const IntervalRegrader& r) {
  CounterexampleReport rep;
  for (const auto& t : {rational(1, 1), rational(5, 4), rational(3, 2), rational(2, 1)})
    rep.sigma.push_back({IntervalSet::single(0, t), r.sigma(IntervalSet::single(0, t))});
  rep.sigma.push_back({IntervalSet::single(1, 2), r.sigma(IntervalSet::single(1, 2))});
  rep.sigma.push_back({IntervalSet{}, r.sigma(IntervalSet{})});
  rep.defect = sigma_rank_modular_defect(r, IntervalSet::single(0, 1), IntervalSet::single(1, 2));
  return rep;
}

/// R x R with the diagonal chief chain (t, t), the chain {(0, b)} and anchors
/// on both sides of the origin.
inline HypothesisSamples<PlanePoint> product_plane_samples() {
  HypothesisSamples<PlanePoint> s;
  const std::vector<Rational> far = {-1000, -100, -10, -1, 0, 1, 10, 100, 1000};
  for (const auto& b : far) s.chain.push_back(PlanePoint::at(0, b));
  for (const auto& t : far) s.chief.push_back(PlanePoint::at(t, t));
  s.anchors = {PlanePoint::at(1, 1), PlanePoint::at(-1, -1)};
  s.probes = {PlanePoint::at(1, 0), PlanePoint::at(-3, 7), PlanePoint::at(rational(1, 2), rational(-5, 2))};
  return s;
}

using BoundedSetsLattice = AdjoinedLattice<IntervalLattice>;

/// Bounded sets of the real line with a top of rank +inf adjoined.
inline BoundedSetsLattice bounded_sets_lattice() {
  return adjoin_bounds(IntervalLattice::unbounded(), Rank::infinity(), Rank(0));
}

/// Chain (1, 1+kappa], centred chief chain, anchors (-1,1] and (-1/2,1/2].
inline HypothesisSamples<BoundedSetsLattice::element_type> bounded_sets_samples() {
  const auto l = bounded_sets_lattice();
  const auto& base = l.base();
  HypothesisSamples<BoundedSetsLattice::element_type> s;
  for (const auto& k : {0, 1, 10, 100, 1000}) s.chain.push_back(l.lift(IntervalSet::single(1, 1 + k)));
  for (const auto& lam : {0, 1, 2, 4, 16, 256, 10000}) s.chief.push_back(l.lift(base.chief_element(lam)));
  s.anchors = {l.lift(base.chief_element(2)), l.lift(base.chief_element(1))};
  s.probes = {l.lift(IntervalSet::single(-1, 1)), l.lift(IntervalSet::of({{-7, -6}, {3, 5}})), l.lift(IntervalSet{})};
  return s;
}

namespace verify {

struct Config {
  std::uint64_t seed = 7;
  int samples = 1000;
  StepDensity density = two_step_density();
  Rational value = 1;
};

struct SuiteResult {
  std::string name;
  std::string description;
  bool pass = true;
  std::size_t checked = 0;
  std::optional<std::string> witness;
  std::vector<std::pair<std::string, std::string>> facts;
};

struct Report {
  Config config;
  std::vector<SuiteResult> suites;

  bool pass() const {
    for (const auto& s : suites)
      if (!s.pass) return false;
    return true;
  }
};

/// Collects checks for one suite; the first failure supplies the witness.
class Recorder {
 public:
  Recorder(std::string name, std::string description) {
    result_.name = std::move(name);
    result_.description = std::move(description);
  }

  bool check(bool ok, const std::function<std::string()>& witness) {
    ++result_.checked;
    if (!ok && result_.pass) {
      result_.pass = false;
      result_.witness = witness();
    }
    return ok;
  }

  void fact(std::string key, std::string value) { result_.facts.emplace_back(std::move(key), std::move(value)); }

  SuiteResult finish() && { return std::move(result_); }

 private:
  SuiteResult result_;
};

namespace detail {

template <class L>
std::vector<std::pair<element_t<L>, element_t<L>>> strict_pairs(const FiniteIndex<L>& idx) {
  std::vector<std::pair<element_t<L>, element_t<L>>> out;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j)
      if (i != j && idx.leq(i, j)) out.emplace_back(idx[i], idx[j]);
  return out;
}

template <class L>
std::vector<std::pair<element_t<L>, element_t<L>>> strict_pairs_among(const L& l, const std::vector<element_t<L>>& xs) {
  std::vector<std::pair<element_t<L>, element_t<L>>> out;
  for (const auto& a : xs)
    for (const auto& b : xs)
      if (less(l, a, b)) out.emplace_back(a, b);
  return out;
}

inline std::string fmt(const IntervalSet& u) { return format(u); }

template <class... Xs>
std::string join_fmt(const Xs&... xs) {
  std::string out;
  ((out += (out.empty() ? "" : " ") + fmt(xs)), ...);
  return out;
}

}  // namespace detail

inline SuiteResult suite_lattice_laws(const Config& cfg) {
  Recorder rec("lattice-laws", "lattice axioms, strict rank, modularity of measures");
  auto exhaustive = [&](const auto& l, const char* label) {
    const auto xs = l.elements();
    for (const auto& x : xs)
      for (const auto& y : xs)
        for (const auto& z : xs) {
          auto bad = lattice_law_violation(l, x, y, z);
          rec.check(!bad, [&] { return std::string(label) + ": " + *bad; });
        }
  };
  exhaustive(BooleanLattice(3), "B_3");
  exhaustive(PartitionLattice(4), "Pi_4");
  exhaustive(SubspaceLattice(2, 3), "F_2^3");
  const auto l = IntervalLattice::bounded(2);
  const auto& f = cfg.density;
  const auto lf = IntervalLattice::bounded(f.length());
  Sampler s(cfg.seed);
  for (int i = 0; i < cfg.samples; ++i) {
    const auto x = s.interval_set(2), y = s.interval_set(2), z = s.interval_set(2);
    auto bad = lattice_law_violation(l, x, y, z);
    rec.check(!bad, [&] { return "interval: " + *bad; });
    rec.check(l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z)),
              [&] { return "distributivity at " + detail::join_fmt(x, y, z); });
    rec.check(l.join(x, l.complement(x)) == *l.top() && l.meet(x, l.complement(x)).empty(),
              [&] { return "complement of " + format(x); });
    rec.check(rank_modular_defect(l, x, y) == Rank(0), [&] { return "measure modularity at " + detail::join_fmt(x, y); });
    const auto u = s.interval_set(f.length()), v = s.interval_set(f.length());
    rec.check(f.nu(lf.join(u, v)) + f.nu(lf.meet(u, v)) == f.nu(u) + f.nu(v),
              [&] { return "density modularity at " + detail::join_fmt(u, v); });
  }
  rec.fact("interval triples", std::to_string(cfg.samples));
  return std::move(rec).finish();
}

inline SuiteResult suite_finite_counts(const Config&) {
  Recorder rec("finite-counts", "exhaustive chain, cutset and rank-modular counts");
  auto count = [&](const std::string& what, std::size_t got, std::size_t want) {
    rec.fact(what, std::to_string(got));
    rec.check(got == want, [&] { return what + " = " + std::to_string(got) + ", expected " + std::to_string(want); });
  };
  const PartitionLattice pi4(4);
  const auto modular = rank_modular_elements(pi4);
  count("rank-modular(Pi_4)", modular.size(), 12);
  for (const auto& m : modular)
    rec.check(m.nontrivial_blocks() <= 1, [&] { return "modular element with two blocks: " + pi4.format(m); });
  count("cutsets(B_2)", antichain_cutsets_exhaustive(BooleanLattice(2)).size(), 3);
  count("maximal chains(B_4)", enumerate_maximal_chains(BooleanLattice(4)).size(), 24);
  count("maximal chains(B_3)", enumerate_maximal_chains(BooleanLattice(3)).size(), 6);
  count("maximal chains(Pi_3)", enumerate_maximal_chains(PartitionLattice(3)).size(), 3);
  count("rank-modular(B_4)", rank_modular_elements(BooleanLattice(4)).size(), 16);
  count("rank-modular(F_2^3)", rank_modular_elements(SubspaceLattice(2, 3)).size(), 16);
  rec.check(chief_chain(BooleanLattice(4)).size() == 5, [] { return "chief chain of B_4"; });
  rec.check(chief_chain(PartitionLattice(4)).size() == 4, [] { return "chief chain of Pi_4"; });
  rec.check(chief_chain(SubspaceLattice(2, 3)).size() == 4, [] { return "chief chain of F_2^3"; });
  return std::move(rec).finish();
}

inline SuiteResult suite_rmbalance(const Config& cfg) {
  Recorder rec("rmbalance", "balance identities for rank-modular pairs");
  Sampler s(cfg.seed ^ 0x1);
  const auto l = IntervalLattice::bounded(2);
  for (int i = 0; i < cfg.samples; ++i) {
    const auto [m2, m] = s.strict_pair(2);
    const auto [w, z] = s.strict_pair(2);
    const auto res = rm_balance_residuals(l, m, m2, w, z);
    rec.check(res.zero(), [&] {
      return "residuals (" + res.along_chain.str() + "," + res.along_chief.str() + ") at " + detail::join_fmt(m, m2, w, z);
    });
  }
  rec.fact("interval instances", std::to_string(cfg.samples));
  const PartitionLattice pi4(4);
  const FiniteIndex<PartitionLattice> idx(pi4);
  const auto mod_pairs = detail::strict_pairs_among(pi4, rank_modular_elements(pi4));
  const auto pairs = detail::strict_pairs(idx);
  std::size_t n = 0;
  for (const auto& [m2, m] : mod_pairs)
    for (const auto& [w, z] : pairs) {
      ++n;
      const auto res = rm_balance_residuals(pi4, m, m2, w, z);
      rec.check(res.zero(), [&] { return "Pi_4 residual at m=" + pi4.format(m) + " w=" + pi4.format(w); });
    }
  rec.fact("Pi_4 instances", std::to_string(n));
  return std::move(rec).finish();
}

inline SuiteResult suite_diamond(const Config& cfg) {
  Recorder rec("diamond", "diamond bounds: nonnegative slacks, balanced rows");
  Sampler s(cfg.seed ^ 0x1);
  const auto l = IntervalLattice::bounded(2);
  auto judge = [&](const DiamondReport& d, const std::function<std::string()>& where) {
    bool nonneg = true;
    for (const auto& row : d.rows)
      for (const auto& b : row) nonneg = nonneg && b.lhs >= Rank(0) && b.holds();
    rec.check(nonneg && d.rows_balanced(), where);
  };
  for (int i = 0; i < cfg.samples; ++i) {
    const auto [m2, m] = s.strict_pair(2);
    const auto [w, z] = s.strict_pair(2);
    judge(diamond_bounds_check(l, m, m2, w, z), [&] { return "interval " + detail::join_fmt(m, m2, w, z); });
  }
  const PartitionLattice pi4(4);
  const FiniteIndex<PartitionLattice> idx(pi4);
  const auto mod_pairs = detail::strict_pairs_among(pi4, rank_modular_elements(pi4));
  const auto pairs = detail::strict_pairs(idx);
  for (const auto& [m2, m] : mod_pairs)
    for (const auto& [w, z] : pairs)
      judge(diamond_bounds_check(pi4, m, m2, w, z), [&] { return "Pi_4 m=" + pi4.format(m) + " w=" + pi4.format(w); });
  return std::move(rec).finish();
}

inline SuiteResult suite_lipschitz(const Config& cfg) {
  Recorder rec("lipschitz", "meet and join with a rank-modular element are 1-Lipschitz along chains");
  const auto l = IntervalLattice::bounded(2);
  std::vector<IntervalSet> prefix;
  for (int i = 0; i <= 16; ++i) prefix.push_back(l.chief_element(rational(i, 8)));
  const auto chain = ChainSample<IntervalSet>::build(l, prefix);
  Sampler s(cfg.seed ^ 0x2);
  for (int i = 0; i < 200; ++i) {
    const auto m = s.interval_set(2);
    for (Side side : {Side::meet, Side::join}) {
      Rational q = lipschitz_scan(l, chain, m, side);
      rec.check(q <= 1, [&] { return "ratio " + to_string(q) + " for m=" + format(m); });
    }
  }
  const PartitionLattice pi4(4);
  const auto chains = enumerate_maximal_chains(pi4);
  for (const auto& m : rank_modular_elements(pi4))
    for (const auto& c : chains) {
      const auto sample = ChainSample<SetPartition>::build(pi4, c);
      for (Side side : {Side::meet, Side::join}) {
        Rational q = lipschitz_scan(pi4, sample, m, side);
        rec.check(q <= 1, [&] { return "Pi_4 ratio " + to_string(q) + " for m=" + pi4.format(m); });
      }
    }
  return std::move(rec).finish();
}

inline SuiteResult suite_left_modular(const Config& cfg) {
  Recorder rec("left-modular", "rank-modular elements are left modular: (w v m) ^ z = w v (m ^ z)");
  auto exhaustive = [&](const auto& l, const char* label) {
    using L = std::decay_t<decltype(l)>;
    const FiniteIndex<L> idx(l);
    const auto pairs = detail::strict_pairs(idx);
    for (const auto& m : rank_modular_elements(l))
      for (const auto& [w, z] : pairs)
        rec.check(left_modular_at(l, m, w, z),
                  [&] { return std::string(label) + " m=" + l.format(m) + " w=" + l.format(w) + " z=" + l.format(z); });
  };
  exhaustive(PartitionLattice(4), "Pi_4");
  exhaustive(BooleanLattice(4), "B_4");
  Sampler s(cfg.seed ^ 0x3);
  const auto l = IntervalLattice::bounded(2);
  for (int i = 0; i < 500; ++i) {
    const auto m = s.interval_set(2);
    const auto [w, z] = s.strict_pair(2);
    rec.check(left_modular_at(l, m, w, z), [&] { return "interval " + detail::join_fmt(m, w, z); });
  }
  return std::move(rec).finish();
}

inline SuiteResult suite_chief_identities(const Config&) {
  Recorder rec("chief-identities", "modular identities along a chief chain");
  auto exhaustive = [&](const auto& l, const char* label) {
    using L = std::decay_t<decltype(l)>;
    const FiniteIndex<L> idx(l);
    const auto chief = chief_chain(l);
    const auto pairs = detail::strict_pairs(idx);
    for (const auto& p : chief)
      for (const auto& [z, w] : pairs)
        rec.check(l.meet(l.join(z, p.element), w) == l.join(z, l.meet(p.element, w)),
                  [&] { return std::string(label) + " first identity m=" + l.format(p.element) + " z=" + l.format(z); });
    for (std::size_t a = 0; a < chief.size(); ++a)
      for (std::size_t b = a + 1; b < chief.size(); ++b)
        for (const auto& z : idx.elements())
          rec.check(chief_pair_modular_at(l, chief[a].element, chief[b].element, z),
                    [&] { return std::string(label) + " second identity z=" + l.format(z); });
  };
  exhaustive(PartitionLattice(4), "Pi_4");
  exhaustive(BooleanLattice(4), "B_4");
  return std::move(rec).finish();
}

inline SuiteResult suite_interval_projection(const Config& cfg) {
  Recorder rec("interval-projection", "w v (m ^ z) is rank modular inside [w, z]");
  Sampler s(cfg.seed ^ 0x4);
  const auto l = IntervalLattice::bounded(2);
  for (int i = 0; i < 500; ++i) {
    const auto m = s.interval_set(2);
    const auto [w, z] = s.strict_pair(2);
    const auto x = l.join(w, l.meet(s.interval_set(2), z));
    Rank d = interval_projection_defect(l, m, w, z, x);
    rec.check(d == Rank(0), [&] { return "defect " + d.str() + " at " + detail::join_fmt(m, w, z, x); });
  }
  rec.fact("interval samples", "500");
  const PartitionLattice pi4(4);
  const FiniteIndex<PartitionLattice> idx(pi4);
  const auto pairs = detail::strict_pairs(idx);
  for (const auto& m : rank_modular_elements(pi4))
    for (const auto& [w, z] : pairs)
      for (const auto& x : idx.elements()) {
        if (!leq(pi4, w, x) || !leq(pi4, x, z)) continue;
        Rank d = interval_projection_defect(pi4, m, w, z, x);
        rec.check(d == Rank(0), [&] { return "Pi_4 defect " + d.str() + " m=" + pi4.format(m) + " x=" + pi4.format(x); });
      }
  return std::move(rec).finish();
}

inline SuiteResult suite_meet_contraction(const Config& cfg) {
  Recorder rec("meet-contraction", "meet with a rank-modular element does not increase the up-down distance");
  const PartitionLattice pi4(4);
  const auto xs = pi4.elements();
  for (const auto& m : rank_modular_elements(pi4))
    for (const auto& x : xs)
      for (const auto& y : xs)
        rec.check(updown_distance(pi4, pi4.meet(m, x), pi4.meet(m, y)) <= updown_distance(pi4, x, y),
                  [&] { return "m=" + pi4.format(m) + " x=" + pi4.format(x) + " y=" + pi4.format(y); });
  Sampler s(cfg.seed ^ 0x5);
  const auto l = IntervalLattice::bounded(1);
  for (int i = 0; i < 300; ++i) {
    const auto x = s.interval_set(1), y = s.interval_set(1), z = s.interval_set(1);
    rec.check(updown_metric(l, l.join(x, z), l.join(y, z)) <= updown_metric(l, x, y),
              [&] { return "join contraction at " + detail::join_fmt(x, y, z); });
  }
  return std::move(rec).finish();
}

inline SuiteResult suite_adjoin_bounds(const Config& cfg) {
  Recorder rec("adjoin-bounds", "adjoining a top of rank +inf keeps it rank modular");
  const auto l = bounded_sets_lattice();
  rec.check(l.rank(*l.top()) == Rank::infinity(), [] { return "adjoined top rank is not +inf"; });
  rec.check(l.rank(*l.bottom()) == Rank(0), [] { return "bottom is not the empty set"; });
  Sampler s(cfg.seed ^ 0x6);
  for (int i = 0; i < 100; ++i) {
    auto x = s.interval_set(8);
    x = IntervalSet::normalize([&] {
      std::vector<Interval> shifted;
      for (const auto& iv : x.intervals()) shifted.push_back({iv.lo - 4, iv.hi - 4});
      return shifted;
    }());
    rec.check(rank_modular_defect(l, *l.top(), l.lift(x)) == Rank(0), [&] { return "defect of top against " + format(x); });
    rec.check(l.join(*l.top(), l.lift(x)) == *l.top() && l.meet(*l.top(), l.lift(x)) == l.lift(x),
              [&] { return "top absorption at " + format(x); });
  }
  bool refused = false;
  try {
    adjoin_bounds(IntervalLattice::bounded(1), Rank(1), Rank(0));
  } catch (const precondition_violation&) {
    refused = true;
  }
  rec.check(refused, [] { return "adjoining to a bounded lattice was accepted"; });
  return std::move(rec).finish();
}

inline SuiteResult suite_good_chain(const Config& cfg) {
  Recorder rec("good-chain", "good chains are maximal");
  const auto& f = cfg.density;
  const auto l = IntervalLattice::bounded(f.length());
  const auto unit = StepDensity::unit(f.length());
  Sampler s(cfg.seed ^ 0x7);
  for (int i = 0; i < 200; ++i) {
    const auto z = s.interval_set(f.length());
    for (const auto* g : {&unit, &f}) {
      const auto c = good_chain_maximality_check(l, z, *g, f.length() / 16);
      rec.check(c.pass, [&] { return format(z) + ": " + c.witness.value_or(""); });
    }
    const auto rho = meet_profile(l, z);
    for (const auto& p : rho.pieces()) rec.check(p.slope == 0 || p.slope == 1, [&] { return "rho slope at " + format(z); });
    rec.check(rho.rise() == lebesgue(z), [&] { return "meet rise at " + format(z); });
  }
  auto finite = [&](const auto& l2, const char* label) {
    using L = std::decay_t<decltype(l2)>;
    const auto cuts = antichain_cutsets_exhaustive(l2);
    const FiniteRegrader<L> r(l2, {cuts.front()});
    for (const auto& z : l2.elements()) {
      const auto c = good_chain_maximality_check(r, z);
      rec.check(c.pass, [&] { return std::string(label) + " " + c.witness.value_or(""); });
    }
  };
  finite(BooleanLattice(4), "B_4");
  finite(PartitionLattice(4), "Pi_4");
  return std::move(rec).finish();
}

inline SuiteResult suite_reversed_chain(const Config& cfg) {
  Recorder rec("reversed-chain", "chief elements reverse maximal chains into maximal chains");
  auto finite = [&](const auto& l, const char* label) {
    using E = element_t<std::decay_t<decltype(l)>>;
    const auto chains = enumerate_maximal_chains(l);
    for (const auto& p : chief_chain(l))
      for (const auto& c : chains) {
        const auto rep = reversed_chain_check(l, p.element, ChainSample<E>::build(l, c));
        rec.check(rep.pass, [&] { return std::string(label) + " m=" + l.format(p.element) + ": " + rep.witness.value_or(""); });
      }
  };
  finite(BooleanLattice(4), "B_4");
  finite(PartitionLattice(4), "Pi_4");
  const auto l = IntervalLattice::bounded(2);
  const auto r = IntervalRegrader(l, {StepDensity::unit(2), 1});
  Sampler s(cfg.seed ^ 0x8);
  for (int i = 0; i < 30; ++i) {
    const auto seed = s.interval_set(2);
    std::vector<IntervalSet> c;
    for (int k = 0; k <= 32; ++k) c.push_back(r.good_chain_at_rank(seed, rational(k, 16)).element);
    const auto sample = ChainSample<IntervalSet>::build(l, c);
    for (int j = 0; j <= 8; ++j) {
      const auto m = l.chief_element(rational(j, 4));
      const auto rep = reversed_chain_check(l, m, sample);
      rec.check(rep.pass, [&] { return "seed " + format(seed) + " m=" + format(m) + ": " + rep.witness.value_or(""); });
    }
  }
  return std::move(rec).finish();
}

inline SuiteResult suite_alpha_order(const Config& cfg) {
  Recorder rec("alpha-order", "projection parameters decrease up the lattice unless alphas coincide");
  const IntervalRegrader r(IntervalLattice::bounded(cfg.density.length()), {cfg.density, cfg.value});
  Sampler s(cfg.seed ^ 0x9);
  int done = 0;
  for (int tries = 0; done < 300 && tries < 100000; ++tries) {
    const auto [w, z] = s.strict_pair(r.length());
    if (cfg.density.nu(w) < cfg.value) continue;
    ++done;
    const auto rep = alpha_order_check(r, w, z);
    rec.check(rep.pass, [&] {
      return "w=" + format(w) + " z=" + format(z) + " lambda " + rep.lambda_w.str() + " vs " + rep.lambda_z.str();
    });
  }
  rec.check(done == 300, [] { return "could not sample enough pairs above the cutset"; });
  return std::move(rec).finish();
}

inline SuiteResult suite_sigma_increasing(const Config& cfg) {
  Recorder rec("sigma-increasing", "sigma is strictly increasing");
  const IntervalRegrader r(IntervalLattice::bounded(cfg.density.length()), {cfg.density, cfg.value});
  Sampler s(cfg.seed ^ 0xa);
  std::vector<std::pair<IntervalSet, IntervalSet>> pairs;
  for (int i = 0; i < 500; ++i) pairs.push_back(s.strict_pair(r.length()));
  const auto rep = sigma_monotone_check(r, pairs);
  rec.check(rep.pass, [&] { return rep.witness.value_or(""); });
  rec.fact("pairs", std::to_string(rep.checked));
  return std::move(rec).finish();
}

inline SuiteResult suite_level_set(const Config& cfg) {
  Recorder rec("level-set", "the cutset is the zero set of sigma and sign(sigma) = sign(nu - c)");
  const IntervalRegrader r(IntervalLattice::bounded(cfg.density.length()), {cfg.density, cfg.value});
  Sampler s(cfg.seed ^ 0xb);
  for (int i = 0; i < 200; ++i) {
    const auto a = s.level_set_member(cfg.density, cfg.value);
    rec.check(cfg.density.nu(a) == cfg.value, [&] { return "generator missed the level at " + format(a); });
    Rank sg = r.sigma(a);
    rec.check(sg == Rank(0), [&] { return "sigma(" + format(a) + ") = " + sg.str(); });
  }
  int off = 0;
  while (off < 200) {
    const auto z = s.interval_set(r.length(), 5);
    const Rational d = cfg.density.nu(z) - cfg.value;
    if (d == 0) continue;
    ++off;
    Rank sg = r.sigma(z);
    rec.check(sg.sign() == (d > 0 ? 1 : -1), [&] { return "sigma(" + format(z) + ") = " + sg.str(); });
  }
  rec.fact("on-level samples", "200");
  rec.fact("off-level samples", "200");
  return std::move(rec).finish();
}

struct SurjectivityStats {
  bool increasing = true;
  bool endpoints = true;
  bool gap_shrinks = true;
  Rational coarse_gap = 0;
  Rational fine_gap = 0;
};

/// sigma along one chain at two grid steps, fine = coarse / 2.
inline SurjectivityStats chain_surjectivity(const IntervalRegrader& r, const ChainSpec& chain, const Rational& coarse) {
  SurjectivityStats st;
  const Rank lo = r.sigma_bottom(), hi = r.sigma_top();
  for (const auto& step : {coarse, coarse / 2}) {
    const auto rows = regrade_table(r, chain, step);
    st.increasing = st.increasing && sigma_strictly_increasing(rows);
    st.endpoints = st.endpoints && rows.front().sigma == lo && rows.back().sigma == hi;
    (step == coarse ? st.coarse_gap : st.fine_gap) = max_sigma_gap(rows);
  }
  st.gap_shrinks = st.fine_gap <= 4 * (st.coarse_gap / 2);
  return st;
}

inline SuiteResult suite_sigma_surjective(const Config& cfg) {
  Recorder rec("sigma-surjective", "sigma sweeps each maximal chain continuously from sigma(bottom) to sigma(top)");
  const IntervalRegrader r(IntervalLattice::bounded(cfg.density.length()), {cfg.density, cfg.value});
  const Rational step = r.length() / 128;
  Sampler s(cfg.seed ^ 0xc);
  std::vector<ChainSpec> chains{ChainSpec::chief()};
  for (int i = 0; i < 50; ++i) chains.push_back(ChainSpec::good_chain(s.interval_set(r.length())));
  for (const auto& c : chains) {
    const auto st = chain_surjectivity(r, c, step);
    const std::string where = c.seed ? "good chain through " + format(*c.seed) : std::string("chief chain");
    rec.check(st.increasing, [&] { return where + ": not strictly increasing"; });
    rec.check(st.endpoints, [&] { return where + ": misses sigma(bottom) or sigma(top)"; });
    rec.check(st.gap_shrinks, [&] { return where + ": gap " + to_string(st.fine_gap) + " vs " + to_string(st.coarse_gap); });
  }
  rec.fact("sigma(bottom)", r.sigma_bottom().str());
  rec.fact("sigma(top)", r.sigma_top().str());
  rec.fact("chains", std::to_string(chains.size()));
  return std::move(rec).finish();
}

inline SuiteResult suite_counterexample(const Config&) {
  Recorder rec("counterexample", "two-step density: sigma values and nonzero modular defect");
  const auto rep = counterexample(two_step_regrader());
  const std::vector<Rank> want = {Rank(0), Rank(rational(1, 4)), Rank(rational(1, 2)), Rank(1), Rank(rational(1, 2)),
                                  Rank(-1)};
  for (std::size_t i = 0; i < want.size(); ++i) {
    const auto& [u, sg] = rep.sigma[i];
    rec.fact("sigma(" + format(u) + ")", sg.str());
    rec.check(sg == want[i], [&] { return "sigma(" + format(u) + ") = " + sg.str() + ", expected " + want[i].str(); });
  }
  rec.fact("defect", rep.defect.str());
  rec.check(rep.defect == Rank(rational(-1, 2)), [&] { return "defect " + rep.defect.str(); });
  return std::move(rec).finish();
}

inline SuiteResult suite_finite_regrading(const Config&) {
  Recorder rec("finite-regrading", "finite run of the construction: every cutset becomes the zero level set");
  auto run = [&](const auto& l, const char* label) {
    const auto rep = finite_regrading_crosscheck(l);
    for (const auto& c : rep.cutsets)
      rec.check(c.pass(), [&] { return std::string(label) + " cutset " + c.cutset + ": " + c.witness.value_or(""); });
    rec.fact(std::string("cutsets(") + label + ")", std::to_string(rep.cutsets.size()));
  };
  run(BooleanLattice(4), "B_4");
  run(PartitionLattice(4), "Pi_4");
  return std::move(rec).finish();
}

inline SuiteResult suite_direct_limit(const Config& cfg) {
  Recorder rec("direct-limit", "coherent isometric embeddings and Cauchy approximation");
  auto tower = [&](const TowerCheck& t, const std::string& what) {
    rec.check(t.pass, [&] { return what + ": " + t.witness.value_or(""); });
  };
  const auto B = TowerFamily::boolean();
  const auto F2 = TowerFamily::subspace(2);
  tower(coherence_check(B, 2, 4, 8), "boolean coherence (2,4,8)");
  tower(coherence_check(B, 1, 2, 4), "boolean coherence (1,2,4)");
  tower(coherence_check(F2, 1, 2, 4), "subspace coherence (1,2,4)");
  tower(coherence_check(F2, 2, 2, 4), "subspace coherence (2,2,4)");
  tower(embedding_check(B, 2, 4), "boolean embedding 2->4");
  tower(embedding_check(B, 2, 8), "boolean embedding 2->8");
  tower(embedding_check(B, 4, 8), "boolean embedding 4->8");
  tower(embedding_check(F2, 1, 4), "subspace embedding 1->4");
  tower(embedding_check(F2, 2, 4), "subspace embedding 2->4");
  for (int k : {1, 2, 3, 4})
    for (int n : {4, 8, 12})
      if (n % k == 0)
        for (const auto& x : BooleanLattice(k).elements())
          rec.check(boolean_to_interval(embed_boolean(x, n)) == boolean_to_interval(x),
                    [&] { return "naturality at " + format(x) + " -> " + std::to_string(n); });
  const auto rows = cauchy_approx(IntervalSet::single(0, rational(1, 3)), {2, 4, 8, 16, 32, 64, 128, 256});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rec.check(rows[i].within_bound(), [&] { return "level " + std::to_string(rows[i].level) + " above bound"; });
    if (i) rec.check(rows[i].to_target <= rows[i - 1].to_target, [&] { return "distance grew at level " + std::to_string(rows[i].level); });
  }
  rec.check(rows.back().to_target <= Rank(rational(2, 256)), [&] { return "level 256 distance " + rows.back().to_target.str(); });
  rec.fact("d((0,1/3], level 256)", rows.back().to_target.str());
  const BooleanLattice b4(4);
  const auto xs = b4.elements();
  for (const auto& x : xs)
    for (const auto& y : xs) {
      const Rank dxy = updown_metric(b4, x, y);
      rec.check((dxy == Rank(0)) == (x == y) && dxy == updown_metric(b4, y, x),
                [&] { return "metric axioms at " + format(x) + " " + format(y); });
      for (const auto& z : xs)
        rec.check(updown_metric(b4, x, z) <= dxy + updown_metric(b4, y, z),
                  [&] { return "triangle at " + format(x) + " " + format(y) + " " + format(z); });
    }
  Sampler s(cfg.seed ^ 0xd);
  const auto unit = IntervalLattice::bounded(1);
  for (int i = 0; i < 300; ++i) {
    const auto x = s.interval_set(1), y = s.interval_set(1), z = s.interval_set(1);
    rec.check(updown_metric(unit, x, z) <= updown_metric(unit, x, y) + updown_metric(unit, y, z),
              [&] { return "interval triangle at " + detail::join_fmt(x, y, z); });
  }
  return std::move(rec).finish();
}

inline SuiteResult suite_continuity_at_infinity(const Config&) {
  Recorder rec("continuity-at-infinity", "unbounded examples where the sup/inf hypotheses fail");
  const auto plane = product_plane_limit_demo({-100, -10, -1, 0, 1, 10, 100});
  rec.check(plane.meet_sup == Rank(0) && plane.meet_at_top == Rank(1), [&] {
    return "plane meet scan sup " + plane.meet_sup.str() + " vs " + plane.meet_at_top.str();
  });
  rec.check(plane.discontinuous_at_neg_inf(), [] { return "plane join scan continuous at -inf"; });
  const auto bdd = bounded_chain_demo({0, 1, 10, 1000}, {0, 1, 2, 4, 100});
  rec.check(bdd.chain_sup == Rank(0) && bdd.chief_reaches_target(), [&] {
    return "bounded sets: chain sup " + bdd.chain_sup.str() + ", chief sup " + bdd.chief_sup.str();
  });
  auto expect = [&](const HypothesisReport& h, const std::vector<std::string>& failing, const std::string& label) {
    std::string got;
    for (const auto& n : h.failing()) got += "[" + n + "]";
    std::string want;
    for (const auto& n : failing) want += "[" + n + "]";
    rec.fact(label + " failing", got.empty() ? "none" : got);
    rec.check(got == want, [&] { return label + " flags " + got + ", expected " + want; });
  };
  expect(main_ext_hypothesis_check(ProductPlaneLattice{}, product_plane_samples()),
         {"sup m ^ c = m", "inf m v c = m"}, "product plane");
  expect(main_ext_hypothesis_check(bounded_sets_lattice(), bounded_sets_samples()), {"sup m ^ c = m"}, "bounded sets");
  {
    const auto l = IntervalLattice::bounded(2);
    HypothesisSamples<IntervalSet> hs;
    for (int i = 0; i <= 4; ++i) hs.chain.push_back(l.chief_element(rational(i, 2)));
    hs.chief = hs.chain;
    hs.anchors = {l.chief_element(1)};
    hs.probes = {IntervalSet::single(1, 2)};
    const auto h = main_ext_hypothesis_check(l, hs);
    bool vacuous = true;
    for (const auto& c : h.conditions) vacuous = vacuous && c.vacuous && c.holds;
    rec.check(vacuous, [] { return "bounded interval lattice conditions not vacuous"; });
  }
  return std::move(rec).finish();
}

struct SuiteEntry {
  const char* name;
  SuiteResult (*run)(const Config&);
};

inline const std::vector<SuiteEntry>& suites() {
  static const std::vector<SuiteEntry> all = {
      {"lattice-laws", suite_lattice_laws},
      {"finite-counts", suite_finite_counts},
      {"rmbalance", suite_rmbalance},
      {"diamond", suite_diamond},
      {"lipschitz", suite_lipschitz},
      {"left-modular", suite_left_modular},
      {"chief-identities", suite_chief_identities},
      {"interval-projection", suite_interval_projection},
      {"meet-contraction", suite_meet_contraction},
      {"adjoin-bounds", suite_adjoin_bounds},
      {"good-chain", suite_good_chain},
      {"reversed-chain", suite_reversed_chain},
      {"alpha-order", suite_alpha_order},
      {"sigma-increasing", suite_sigma_increasing},
      {"level-set", suite_level_set},
      {"sigma-surjective", suite_sigma_surjective},
      {"counterexample", suite_counterexample},
      {"finite-regrading", suite_finite_regrading},
      {"direct-limit", suite_direct_limit},
      {"continuity-at-infinity", suite_continuity_at_infinity},
  };
  return all;
}

/// Runs one suite by name, or every suite for "all". An exception escaping a
/// suite counts as its failure.
inline Report run(const std::string& suite, const Config& cfg) {
  Report rep{cfg, {}};
  bool found = false;
  for (const auto& e : suites()) {
    if (suite != "all" && suite != e.name) continue;
    found = true;
    try {
      rep.suites.push_back(e.run(cfg));
    } catch (const std::exception& ex) {
      SuiteResult r;
      r.name = e.name;
      r.pass = false;
      r.witness = std::string("exception: ") + ex.what();
      rep.suites.push_back(std::move(r));
    }
  }
  if (!found) throw parse_error("unknown suite '" + suite + "'");
  return rep;
}

}  // namespace verify
}  // namespace rgl
