#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rgl/errors.hpp"
#include "rgl/finite/caps.hpp"
#include "rgl/rank.hpp"

namespace rgl {

namespace gf {

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline int inverse(int a, int p) {
  int result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

using Matrix = std::vector<std::vector<int>>;

/// Reduced row-echelon form over F_p with zero rows dropped.
inline Matrix rref(Matrix rows, int p) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
    std::size_t r = pivot_row;
    while (r < rows.size() && rows[r][c] == 0) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[pivot_row]);
    const int inv = inverse(rows[pivot_row][c], p);
    for (auto& v : rows[pivot_row]) v = v * inv % p;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == pivot_row || rows[k][c] == 0) continue;
      const int f = rows[k][c];
      for (std::size_t j = 0; j < cols; ++j) rows[k][j] = ((rows[k][j] - f * rows[pivot_row][j]) % p + p) % p;
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

}  // namespace gf

/// Subspace of F_p^n, held as its reduced row-echelon basis.
class Subspace {
 public:
  Subspace() = default;

  /// Any spanning set; reduced to canonical form.
  static Subspace span(int p, int n, gf::Matrix vectors) {
    check_params(p, n);
    for (auto& v : vectors) {
      if (static_cast<int>(v.size()) != n) throw precondition_violation("vector length differs from ambient dimension");
      for (auto& x : v) x = ((x % p) + p) % p;
    }
    Subspace s;
    s.p_ = p;
    s.n_ = n;
    s.rows_ = gf::rref(std::move(vectors), p);
    return s;
  }

  static Subspace zero(int p, int n) { return span(p, n, {}); }

  static Subspace whole(int p, int n) {
    gf::Matrix id(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) id[i][i] = 1;
    return span(p, n, std::move(id));
  }

  /// span(e_i) for the listed 1-based coordinates.
  static Subspace coordinate(int p, int n, const std::vector<int>& coords) {
    gf::Matrix rows;
    for (int c : coords) {
      std::vector<int> v(n, 0);
      v.at(c - 1) = 1;
      rows.push_back(std::move(v));
    }
    return span(p, n, std::move(rows));
  }

  int prime() const { return p_; }
  int ambient() const { return n_; }
  int dimension() const { return static_cast<int>(rows_.size()); }
  const gf::Matrix& basis() const { return rows_; }

  Subspace canonicalized() const { return span(p_, n_, rows_); }

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  static void check_params(int p, int n) {
    if (!gf::is_prime(p) || p > caps::max_subspace_prime) throw precondition_violation("field order must be a prime <= " + std::to_string(caps::max_subspace_prime));
    if (n < 1 || n > caps::max_subspace_dimension)
      throw size_cap_exceeded("subspace ambient dimension " + std::to_string(n) + " outside [1, " +
                              std::to_string(caps::max_subspace_dimension) + "]");
  }

  int p_ = 2;
  int n_ = 0;
  gf::Matrix rows_;
};

inline std::string format(const Subspace& s) {
  if (s.dimension() == 0) return "span()";
  std::string out = "span(";
  for (std::size_t r = 0; r < s.basis().size(); ++r) {
    out += r ? ",(" : "(";
    for (std::size_t c = 0; c < s.basis()[r].size(); ++c) out += (c ? "," : "") + std::to_string(s.basis()[r][c]);
    out += ")";
  }
  return out + ")";
}

/// Subspaces of F_p^n; meet = intersection, join = sum, rank = dimension.
class SubspaceLattice {
 public:
  using element_type = Subspace;

  SubspaceLattice(int p, int n) : p_(p), n_(n) { (void)Subspace::zero(p, n); }

  int prime() const { return p_; }
  int ambient() const { return n_; }
  int level() const { return n_; }

  Subspace join(const Subspace& x, const Subspace& y) const {
    check(x, y);
    gf::Matrix rows = x.basis();
    rows.insert(rows.end(), y.basis().begin(), y.basis().end());
    return Subspace::span(p_, n_, std::move(rows));
  }

  /// Zassenhaus: row-reduce [x | x] stacked on [y | 0]; rows whose left half
  /// vanishes carry a basis of the intersection in their right half.
  Subspace meet(const Subspace& x, const Subspace& y) const {
    check(x, y);
    gf::Matrix stacked;
    for (const auto& r : x.basis()) {
      std::vector<int> row(r);
      row.insert(row.end(), r.begin(), r.end());
      stacked.push_back(std::move(row));
    }
    for (const auto& r : y.basis()) {
      std::vector<int> row(r);
      row.resize(2 * n_, 0);
      stacked.push_back(std::move(row));
    }
    gf::Matrix reduced = gf::rref(std::move(stacked), p_);
    gf::Matrix inter;
    for (const auto& row : reduced) {
      bool left_zero = true;
      for (int j = 0; j < n_; ++j) left_zero = left_zero && row[j] == 0;
      if (left_zero) inter.emplace_back(row.begin() + n_, row.end());
    }
    return Subspace::span(p_, n_, std::move(inter));
  }

  Rank rank(const Subspace& x) const {
    check(x, x);
    return Rank(x.dimension());
  }
  std::optional<Subspace> bottom() const { return Subspace::zero(p_, n_); }
  std::optional<Subspace> top() const { return Subspace::whole(p_, n_); }
  std::string format(const Subspace& x) const { return rgl::format(x); }

  /// Sum of Gaussian binomials [n choose k]_p, via the q-Pascal recurrence.
  std::uint64_t size() const {
    std::vector<std::uint64_t> row{1};
    for (int m = 1; m <= n_; ++m) {
      std::vector<std::uint64_t> next(m + 1, 1);
      for (int k = 1; k < m; ++k) next[k] = row[k - 1] + ipow(p_, k) * row[k];
      row = std::move(next);
    }
    std::uint64_t total = 0;
    for (auto v : row) total += v;
    return total;
  }

  /// Every reduced row-echelon matrix: choose pivot columns, then fill the
  /// free entries right of each pivot that are not pivot columns.
  std::vector<Subspace> elements() const {
    if (size() > caps::max_verified_elements * 64) throw size_cap_exceeded("subspace lattice too large to enumerate");
    std::vector<Subspace> out;
    for (int mask = 0; mask < (1 << n_); ++mask) {
      std::vector<int> pivots;
      for (int c = 0; c < n_; ++c)
        if (mask >> c & 1) pivots.push_back(c);
      std::vector<std::pair<int, int>> free;
      for (std::size_t r = 0; r < pivots.size(); ++r)
        for (int c = pivots[r] + 1; c < n_; ++c)
          if (!(mask >> c & 1)) free.emplace_back(static_cast<int>(r), c);
      gf::Matrix rows(pivots.size(), std::vector<int>(n_, 0));
      for (std::size_t r = 0; r < pivots.size(); ++r) rows[r][pivots[r]] = 1;
      auto rec = [&](auto& self, std::size_t k) -> void {
        if (k == free.size()) {
          out.push_back(Subspace::span(p_, n_, rows));
          return;
        }
        for (int v = 0; v < p_; ++v) {
          rows[free[k].first][free[k].second] = v;
          self(self, k + 1);
        }
        rows[free[k].first][free[k].second] = 0;
      };
      rec(rec, 0);
    }
    return out;
  }

  /// Coordinate flag span(e_1..e_i).
  Subspace chief_element(int i) const {
    if (i < 0 || i > n_) throw precondition_violation("chief index out of range");
    std::vector<int> coords;
    for (int c = 1; c <= i; ++c) coords.push_back(c);
    return Subspace::coordinate(p_, n_, coords);
  }

  friend bool operator==(const SubspaceLattice&, const SubspaceLattice&) = default;

 private:
  static std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
  }

  void check(const Subspace& x, const Subspace& y) const {
    for (const Subspace* s : {&x, &y})
      if (s->prime() != p_ || s->ambient() != n_)
        throw ambient_mismatch("subspace of F_" + std::to_string(s->prime()) + "^" + std::to_string(s->ambient()) +
                               " used in lattice of F_" + std::to_string(p_) + "^" + std::to_string(n_));
  }

  int p_;
  int n_;
};

}  // namespace rgl
