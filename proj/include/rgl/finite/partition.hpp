#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "rgl/errors.hpp"
#include "rgl/finite/caps.hpp"
#include "rgl/rank.hpp"

namespace rgl {

/// Set partition of [n] stored as a restricted growth string: label[i] is
/// the block of element i+1, blocks numbered in order of their minimum.
/// That form is unique per partition, so equality is structural.
class SetPartition {
 public:
  using Labels = std::array<std::uint8_t, caps::max_partition_ground>;

  SetPartition() = default;

  /// Relabels any block assignment into canonical form.
  static SetPartition from_labels(int n, const std::vector<int>& labels) {
    check_ground(n);
    if (static_cast<int>(labels.size()) != n) throw precondition_violation("label count differs from ground size");
    SetPartition p;
    p.n_ = n;
    std::vector<std::pair<int, int>> seen;  // raw label -> canonical
    int next = 0;
    for (int i = 0; i < n; ++i) {
      auto it = std::find_if(seen.begin(), seen.end(), [&](auto& s) { return s.first == labels[i]; });
      if (it == seen.end()) {
        seen.emplace_back(labels[i], next);
        p.labels_[i] = static_cast<std::uint8_t>(next++);
      } else {
        p.labels_[i] = static_cast<std::uint8_t>(it->second);
      }
    }
    p.blocks_ = next;
    return p;
  }

  /// Blocks use 1-based elements; they must partition [n].
  static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    check_ground(n);
    std::vector<int> labels(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) throw precondition_violation("empty block");
      for (int e : blocks[b]) {
        if (e < 1 || e > n) throw precondition_violation("block element " + std::to_string(e) + " outside [n]");
        if (labels[e - 1] != -1) throw precondition_violation("element " + std::to_string(e) + " in two blocks");
        labels[e - 1] = static_cast<int>(b);
      }
    }
    if (std::find(labels.begin(), labels.end(), -1) != labels.end())
      throw precondition_violation("blocks do not cover [n]");
    return from_labels(n, labels);
  }

  static SetPartition discrete(int n) {
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    return from_labels(n, labels);
  }

  static SetPartition full(int n) { return from_labels(n, std::vector<int>(n, 0)); }

  int ground() const { return n_; }
  int block_count() const { return blocks_; }
  int label(int element) const { return labels_[element - 1]; }

  /// Blocks sorted by minimum element, each block ascending.
  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out(blocks_);
    for (int i = 0; i < n_; ++i) out[labels_[i]].push_back(i + 1);
    return out;
  }

  /// Number of blocks with at least two elements.
  int nontrivial_blocks() const {
    int count = 0;
    for (const auto& b : blocks())
      if (b.size() > 1) ++count;
    return count;
  }

  SetPartition canonicalized() const {
    return from_labels(n_, std::vector<int>(labels_.begin(), labels_.begin() + n_));
  }

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.n_ == b.n_ && std::equal(a.labels_.begin(), a.labels_.begin() + a.n_, b.labels_.begin());
  }

 private:
  static void check_ground(int n) {
    if (n < 1 || n > caps::max_partition_ground)
      throw size_cap_exceeded("partition ground size " + std::to_string(n) + " outside [1, " +
                              std::to_string(caps::max_partition_ground) + "]");
  }

  int n_ = 0;
  int blocks_ = 0;
  Labels labels_{};
};

inline std::string format(const SetPartition& p) {
  std::string out = "{";
  bool first_block = true;
  for (const auto& b : p.blocks()) {
    if (!first_block) out += ",";
    out += "{";
    for (std::size_t i = 0; i < b.size(); ++i) out += (i ? "," : "") + std::to_string(b[i]);
    out += "}";
    first_block = false;
  }
  return out + "}";
}

/// Pi_n ordered by refinement (finer below), rank = n - #blocks.
class PartitionLattice {
 public:
  using element_type = SetPartition;

  explicit PartitionLattice(int n) : n_(n) {
    if (n < 1 || n > caps::max_partition_ground)
      throw size_cap_exceeded("partition ground size " + std::to_string(n) + " exceeds cap");
  }

  int ground() const { return n_; }

  /// Common refinement: elements share a block iff they do in both.
  SetPartition meet(const SetPartition& x, const SetPartition& y) const {
    check(x, y);
    std::vector<int> labels(n_);
    for (int i = 1; i <= n_; ++i) labels[i - 1] = x.label(i) * n_ + y.label(i);
    return SetPartition::from_labels(n_, labels);
  }

  /// Finest common coarsening, by union-find over both block structures.
  SetPartition join(const SetPartition& x, const SetPartition& y) const {
    check(x, y);
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int i) {
      while (parent[i] != i) i = parent[i] = parent[parent[i]];
      return i;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (const SetPartition* p : {&x, &y}) {
      std::vector<int> first(n_, -1);
      for (int i = 0; i < n_; ++i) {
        int b = p->label(i + 1);
        if (first[b] < 0)
          first[b] = i;
        else
          unite(i, first[b]);
      }
    }
    std::vector<int> labels(n_);
    for (int i = 0; i < n_; ++i) labels[i] = find(i);
    return SetPartition::from_labels(n_, labels);
  }

  Rank rank(const SetPartition& x) const {
    check(x, x);
    return Rank(n_ - x.block_count());
  }
  std::optional<SetPartition> bottom() const { return SetPartition::discrete(n_); }
  std::optional<SetPartition> top() const { return SetPartition::full(n_); }
  std::string format(const SetPartition& x) const { return rgl::format(x); }

  /// Bell number B(n).
  std::uint64_t size() const {
    std::vector<std::uint64_t> row{1};
    for (int i = 1; i <= n_; ++i) {
      std::vector<std::uint64_t> next{row.back()};
      for (auto v : row) next.push_back(next.back() + v);
      row = std::move(next);
    }
    return row.front();
  }

  /// All restricted growth strings of length n.
  std::vector<SetPartition> elements() const {
    std::vector<SetPartition> out;
    std::vector<int> labels(n_, 0);
    auto rec = [&](auto& self, int i, int max_label) -> void {
      if (i == n_) {
        out.push_back(SetPartition::from_labels(n_, labels));
        return;
      }
      for (int b = 0; b <= max_label + 1; ++b) {
        labels[i] = b;
        self(self, i + 1, std::max(max_label, b));
      }
    };
    rec(rec, 1, 0);
    return out;
  }

  /// {1..i+1} as one block, everything else singletons.
  SetPartition chief_element(int i) const {
    if (i < 0 || i > n_ - 1) throw precondition_violation("chief index out of range");
    std::vector<int> labels(n_);
    for (int e = 0; e < n_; ++e) labels[e] = e <= i ? 0 : e;
    return SetPartition::from_labels(n_, labels);
  }

  friend bool operator==(const PartitionLattice&, const PartitionLattice&) = default;

 private:
  void check(const SetPartition& x, const SetPartition& y) const {
    if (x.ground() != n_ || y.ground() != n_) throw ambient_mismatch("partition of a different ground set used in Pi_" + std::to_string(n_));
  }

  int n_;
};

}  // namespace rgl
