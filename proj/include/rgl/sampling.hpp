#pragma once

// Seeded random generation of interval-lattice elements on a rational grid.

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "rgl/errors.hpp"
#include "rgl/interval.hpp"

namespace rgl {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// Uniform on {0, 1/d, ..., d/d} with d drawn from a few small denominators.
  Rational unit_fraction() {
    static constexpr int dens[] = {2, 3, 4, 5, 6, 8, 12, 16};
    const int d = dens[uniform(0, 7)];
    return rational(uniform(0, d), d);
  }

  /// Random union of up to `max_pieces` intervals of (0, T] with endpoints
  /// on mixed grids. May be empty.
  IntervalSet interval_set(const Rational& length, int max_pieces = 4) {
    const int k = uniform(0, max_pieces);
    std::vector<Rational> points;
    for (int i = 0; i < 2 * k; ++i) points.push_back(unit_fraction() * length);
    std::sort(points.begin(), points.end());
    std::vector<Interval> raw;
    for (std::size_t i = 0; i + 1 < points.size(); i += 2)
      if (points[i] < points[i + 1]) raw.push_back({points[i], points[i + 1]});
    return IntervalSet::normalize(std::move(raw));
  }

  IntervalSet nonempty_interval_set(const Rational& length, int max_pieces = 4) {
    for (;;) {
      auto u = interval_set(length, max_pieces);
      if (!u.empty()) return u;
    }
  }

  /// A pair w < z.
  std::pair<IntervalSet, IntervalSet> strict_pair(const Rational& length) {
    for (;;) {
      IntervalSet w = interval_set(length);
      IntervalSet z = unite(w, interval_set(length));
      if (!(z == w)) return {std::move(w), std::move(z)};
    }
  }

  /// A set u with f.nu(u) == c exactly: the mass c is split at random across
  /// the pieces of a random carrier of mass >= c, and each share is realized
  /// as a sub-interval at a random offset inside its piece.
  IntervalSet level_set_member(const StepDensity& f, const Rational& c) {
    if (!(c > 0) || c > f.total()) throw precondition_violation("level outside (0, total]");
    IntervalSet carrier;
    do carrier = nonempty_interval_set(f.length(), 5);
    while (f.nu(carrier) < c);
    std::vector<Interval> pieces = carrier.intervals();
    std::shuffle(pieces.begin(), pieces.end(), rng_);
    std::vector<Rational> cap, share(pieces.size(), Rational(0));
    for (const auto& p : pieces) cap.push_back(f.nu(IntervalSet::single(p.lo, p.hi)));
    Rational left = c;
    for (std::size_t i = 0; i < pieces.size() && left > 0; ++i) {
      share[i] = std::min(cap[i], left * unit_fraction());
      left -= share[i];
    }
    for (std::size_t i = 0; i < pieces.size() && left > 0; ++i) {
      Rational extra = std::min(cap[i] - share[i], left);
      share[i] += extra;
      left -= extra;
    }
    std::vector<Interval> raw;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (share[i] == 0) continue;
      const Rational base = f.cumulative(pieces[i].lo);
      const Rational start = base + unit_fraction() * (cap[i] - share[i]);
      raw.push_back({f.inverse_cumulative(start), f.inverse_cumulative(start + share[i])});
    }
    return IntervalSet::normalize(std::move(raw));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace rgl
