#pragma once

// Independent reference computations for the tests. These work on raw
// interval lists and brute-force enumeration and share no algorithm with the
// library beyond the rational number type.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "rgl/rank.hpp"

namespace oracle {

using Q = rgl::Rational;
using Piece = std::pair<Q, Q>;  // (lo, hi]
using Pieces = std::vector<Piece>;

struct Density {
  std::vector<Q> breaks;
  std::vector<Q> values;
};

inline Q length(const Pieces& u) {
  Q s = 0;
  for (const auto& [a, b] : u) s += b - a;
  return s;
}

/// Integral of the density over u, cell by cell.
inline Q mass(const Pieces& u, const Density& f) {
  Q s = 0;
  for (const auto& [a, b] : u)
    for (std::size_t j = 0; j < f.values.size(); ++j) {
      const Q lo = std::max(a, f.breaks[j]);
      const Q hi = std::min(b, f.breaks[j + 1]);
      if (lo < hi) s += (hi - lo) * f.values[j];
    }
  return s;
}

/// u cut into density cells, sorted left to right.
inline std::vector<std::pair<Piece, Q>> cells(Pieces u, const Density& f) {
  std::sort(u.begin(), u.end());
  std::vector<std::pair<Piece, Q>> out;
  for (const auto& [a, b] : u)
    for (std::size_t j = 0; j < f.values.size(); ++j) {
      const Q lo = std::max(a, f.breaks[j]);
      const Q hi = std::min(b, f.breaks[j + 1]);
      if (lo < hi) out.push_back({{lo, hi}, f.values[j]});
    }
  return out;
}

/// (0, T] minus u.
inline Pieces complement(Pieces u, const Q& T) {
  std::sort(u.begin(), u.end());
  Pieces out;
  Q at = 0;
  for (const auto& [a, b] : u) {
    if (at < a) out.push_back({at, a});
    at = std::max(at, b);
  }
  if (at < T) out.push_back({at, T});
  return out;
}

/// sigma for the prefix chief chain on (0, T] and the level set mass = c.
/// Above the level: walk z left to right until the mass reaches c; the rank
/// of alpha is the length walked. Below: walk the gaps of z instead, adding
/// to z's own mass and length.
inline Q sigma(const Pieces& z, const Density& f, const Q& c) {
  const Q T = f.breaks.back();
  const Q mz = mass(z, f);
  const Q rho_z = length(z);
  if (mz >= c) {
    Q need = c, walked = 0;
    for (const auto& [piece, v] : cells(z, f)) {
      const Q m = (piece.second - piece.first) * v;
      if (need <= m) return rho_z - (walked + need / v);
      need -= m;
      walked += piece.second - piece.first;
    }
    return rho_z - walked;
  }
  Q need = c - mz, walked = 0;
  for (const auto& [piece, v] : cells(complement(z, T), f)) {
    const Q m = (piece.second - piece.first) * v;
    if (need <= m) return -(walked + need / v);
    need -= m;
    walked += piece.second - piece.first;
  }
  return -walked;
}

// ---- finite lattices by brute force

/// Boolean lattice B_n: elements are masks, order is inclusion.
inline std::vector<std::vector<std::uint32_t>> boolean_maximal_chains(int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::vector<std::uint32_t>> out;
  do {
    std::vector<std::uint32_t> chain{0};
    for (int i : perm) chain.push_back(chain.back() | (1u << i));
    out.push_back(chain);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Antichain cutsets of B_n by filtering all subsets of the 2^n elements.
inline std::size_t boolean_cutset_count(int n) {
  const int size = 1 << n;
  const auto chains = boolean_maximal_chains(n);
  auto subset_of = [](std::uint32_t a, std::uint32_t b) { return (a & b) == a; };
  std::size_t count = 0;
  for (std::uint64_t family = 1; family < (std::uint64_t{1} << size); ++family) {
    bool antichain = true;
    for (int a = 0; a < size && antichain; ++a)
      for (int b = 0; b < size && antichain; ++b)
        if (a != b && (family >> a & 1) && (family >> b & 1) && subset_of(a, b)) antichain = false;
    if (!antichain) continue;
    bool cuts = true;
    for (const auto& c : chains) {
      bool hit = false;
      for (auto x : c) hit = hit || (family >> x & 1);
      cuts = cuts && hit;
    }
    if (cuts) ++count;
  }
  return count;
}

/// Set partitions of {1..n} as block lists, each block sorted, blocks sorted
/// by least element.
inline std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> cur;
  auto rec = [&](auto& self, int e) -> void {
    if (e > n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t b = 0; b < cur.size(); ++b) {
      cur[b].push_back(e);
      self(self, e + 1);
      cur[b].pop_back();
    }
    cur.push_back({e});
    self(self, e + 1);
    cur.pop_back();
  };
  rec(rec, 1);
  return out;
}

}  // namespace oracle
