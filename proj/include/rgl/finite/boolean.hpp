#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rgl/errors.hpp"
#include "rgl/finite/caps.hpp"
#include "rgl/rank.hpp"

namespace rgl {

/// Subset of [n] = {1..n}; bit i-1 stands for element i.
struct BitSubset {
  int n = 0;
  std::uint32_t mask = 0;

  static BitSubset of(int n, std::initializer_list<int> members) {
    return from_members(n, std::vector<int>(members));
  }

  static BitSubset from_members(int n, const std::vector<int>& members) {
    if (n < 0 || n > caps::max_boolean_ground)
      throw size_cap_exceeded("boolean ground set size " + std::to_string(n) + " outside [0, " +
                              std::to_string(caps::max_boolean_ground) + "]");
    BitSubset s{n, 0};
    for (int i : members) {
      if (i < 1 || i > n) throw precondition_violation("element " + std::to_string(i) + " not in [" + std::to_string(n) + "]");
      s.mask |= std::uint32_t{1} << (i - 1);
    }
    return s;
  }

  int cardinality() const { return std::popcount(mask); }
  bool contains(int i) const { return (mask >> (i - 1)) & 1u; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  friend bool operator==(const BitSubset&, const BitSubset&) = default;
};

inline std::string format(const BitSubset& s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.members()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

/// B_n: all subsets of [n] under inclusion, graded by cardinality.
class BooleanLattice {
 public:
  using element_type = BitSubset;

  explicit BooleanLattice(int n) : n_(n) {
    if (n < 0 || n > caps::max_boolean_ground)
      throw size_cap_exceeded("boolean ground set size " + std::to_string(n) + " exceeds cap");
  }

  int ground() const { return n_; }
  /// Tower level for renormalized ranks.
  int level() const { return n_; }

  BitSubset meet(const BitSubset& x, const BitSubset& y) const { return {check(x, y), x.mask & y.mask}; }
  BitSubset join(const BitSubset& x, const BitSubset& y) const { return {check(x, y), x.mask | y.mask}; }
  Rank rank(const BitSubset& x) const {
    check(x, x);
    return Rank(x.cardinality());
  }
  std::optional<BitSubset> bottom() const { return BitSubset{n_, 0}; }
  std::optional<BitSubset> top() const { return BitSubset{n_, full_mask()}; }
  std::string format(const BitSubset& x) const { return rgl::format(x); }

  std::uint64_t size() const { return std::uint64_t{1} << n_; }

  std::vector<BitSubset> elements() const {
    std::vector<BitSubset> out;
    out.reserve(size());
    for (std::uint64_t m = 0; m < size(); ++m) out.push_back({n_, static_cast<std::uint32_t>(m)});
    return out;
  }

  /// Prefix subset {1..i}.
  BitSubset chief_element(int i) const {
    if (i < 0 || i > n_) throw precondition_violation("chief index out of range");
    return {n_, (std::uint32_t{1} << i) - 1};
  }

  friend bool operator==(const BooleanLattice&, const BooleanLattice&) = default;

 private:
  std::uint32_t full_mask() const { return (std::uint32_t{1} << n_) - 1; }

  int check(const BitSubset& x, const BitSubset& y) const {
    if (x.n != n_ || y.n != n_)
      throw ambient_mismatch("subset of [" + std::to_string(x.n == n_ ? y.n : x.n) + "] used in B_" + std::to_string(n_));
    return n_;
  }

  int n_;
};

}  // namespace rgl
