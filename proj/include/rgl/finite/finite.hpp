#pragma once

// Exhaustive algorithms over small finite graded lattices: maximal chains,
// antichain cutsets, rank-modular elements and chief chains.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rgl/errors.hpp"
#include "rgl/finite/caps.hpp"
#include "rgl/lattice.hpp"

namespace rgl {

template <class L>
concept SizedFiniteLattice = FiniteLattice<L> && requires(const L& l) {
  { l.size() } -> std::convertible_to<std::uint64_t>;
};

template <class L>
concept ChiefFiniteLattice = SizedFiniteLattice<L> && requires(const L& l, int i) {
  { l.chief_element(i) } -> std::convertible_to<element_t<L>>;
};

/// Element table with the order relation and cover graph precomputed.
template <SizedFiniteLattice L>
class FiniteIndex {
 public:
  using E = element_t<L>;

  static constexpr std::uint64_t max_elements = 1024;

  explicit FiniteIndex(const L& l) : lattice_(l) {
    if (l.size() > max_elements)
      throw size_cap_exceeded("lattice with " + std::to_string(l.size()) + " elements exceeds exhaustive cap " +
                              std::to_string(max_elements));
    elements_ = l.elements();
    const std::size_t n = elements_.size();
    ranks_.reserve(n);
    for (const auto& e : elements_) ranks_.push_back(l.rank(e));
    leq_.assign(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) leq_[i][j] = rgl::leq(l, elements_[i], elements_[j]);
    covers_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && leq_[i][j] && ranks_[j] == ranks_[i] + Rank(1)) covers_[i].push_back(j);
    bottom_ = index_of(*l.bottom());
    top_ = index_of(*l.top());
  }

  const L& lattice() const { return lattice_; }
  std::size_t size() const { return elements_.size(); }
  const E& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<E>& elements() const { return elements_; }
  const Rank& rank(std::size_t i) const { return ranks_[i]; }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i][j]; }
  bool comparable(std::size_t i, std::size_t j) const { return leq_[i][j] || leq_[j][i]; }
  const std::vector<std::size_t>& covers(std::size_t i) const { return covers_[i]; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

  std::size_t index_of(const E& e) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (elements_[i] == e) return i;
    throw precondition_violation("element " + lattice_.format(e) + " not in lattice");
  }

  /// Saturated bottom-to-top chains as index lists.
  std::vector<std::vector<std::size_t>> maximal_chains() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> path{bottom_};
    auto rec = [&](auto& self, std::size_t at) -> void {
      if (at == top_) {
        if (out.size() >= caps::max_maximal_chains) throw size_cap_exceeded("too many maximal chains");
        out.push_back(path);
        return;
      }
      for (std::size_t next : covers_[at]) {
        path.push_back(next);
        self(self, next);
        path.pop_back();
      }
    };
    rec(rec, bottom_);
    return out;
  }

 private:
  L lattice_;
  std::vector<E> elements_;
  std::vector<Rank> ranks_;
  std::vector<std::vector<char>> leq_;
  std::vector<std::vector<std::size_t>> covers_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

template <SizedFiniteLattice L>
std::vector<std::vector<element_t<L>>> enumerate_maximal_chains(const L& l) {
  FiniteIndex<L> idx(l);
  std::vector<std::vector<element_t<L>>> out;
  for (const auto& chain : idx.maximal_chains()) {
    std::vector<element_t<L>> c;
    for (auto i : chain) c.push_back(idx[i]);
    out.push_back(std::move(c));
  }
  return out;
}

/// Antichain cutsets as index masks (bit i = element i of the index).
template <SizedFiniteLattice L>
std::vector<std::uint64_t> antichain_cutset_masks(const FiniteIndex<L>& idx) {
  if (idx.size() > caps::max_exhaustive_elements)
    throw size_cap_exceeded("antichain enumeration is capped at " + std::to_string(caps::max_exhaustive_elements) +
                            " elements");
  std::vector<std::uint64_t> chain_masks;
  for (const auto& chain : idx.maximal_chains()) {
    std::uint64_t m = 0;
    for (auto i : chain) m |= std::uint64_t{1} << i;
    chain_masks.push_back(m);
  }
  std::vector<std::uint64_t> out;
  const std::size_t n = idx.size();
  auto rec = [&](auto& self, std::size_t from, std::uint64_t chosen) -> void {
    if (chosen != 0) {
      bool cuts = true;
      for (auto cm : chain_masks)
        if ((cm & chosen) == 0) {
          cuts = false;
          break;
        }
      if (cuts) out.push_back(chosen);
    }
    for (std::size_t i = from; i < n; ++i) {
      bool free = true;
      for (std::size_t j = 0; j < n && free; ++j)
        if ((chosen >> j & 1) && idx.comparable(i, j)) free = false;
      if (free) self(self, i + 1, chosen | (std::uint64_t{1} << i));
    }
  };
  rec(rec, 0, 0);
  return out;
}

template <SizedFiniteLattice L>
std::vector<std::vector<element_t<L>>> antichain_cutsets_exhaustive(const L& l) {
  FiniteIndex<L> idx(l);
  std::vector<std::vector<element_t<L>>> out;
  for (auto mask : antichain_cutset_masks(idx)) {
    std::vector<element_t<L>> a;
    for (std::size_t i = 0; i < idx.size(); ++i)
      if (mask >> i & 1) a.push_back(idx[i]);
    out.push_back(std::move(a));
  }
  return out;
}

template <SizedFiniteLattice L>
std::vector<element_t<L>> rank_modular_elements(const L& l) {
  FiniteIndex<L> idx(l);
  std::vector<element_t<L>> out;
  for (const auto& m : idx.elements())
    if (rank_modular_against(l, m, idx.elements())) out.push_back(m);
  return out;
}

template <SizedFiniteLattice L>
std::vector<element_t<L>> level_set(const L& l, const Rank& r) {
  std::vector<element_t<L>> out;
  for (const auto& e : l.elements())
    if (Rank(l.rank(e)) == r) out.push_back(e);
  return out;
}

/// True iff `chain` runs from bottom to top with every step a cover.
template <GradedLattice L>
bool is_saturated_chain(const L& l, const std::vector<element_t<L>>& chain) {
  if (chain.empty() || !(chain.front() == *l.bottom()) || !(chain.back() == *l.top())) return false;
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (!less(l, chain[i - 1], chain[i]) || Rank(l.rank(chain[i])) != Rank(l.rank(chain[i - 1])) + Rank(1))
      return false;
  return true;
}

/// The family's built-in chief chain, checked element by element for rank
/// modularity. A failed check is an internal error.
template <ChiefFiniteLattice L>
ChainSample<element_t<L>> chief_chain(const L& l) {
  if (l.size() > caps::max_verified_elements)
    throw size_cap_exceeded("chief chain verification capped at " + std::to_string(caps::max_verified_elements) +
                            " elements");
  const Rank top_rank = l.rank(*l.top());
  std::vector<element_t<L>> chain;
  for (int i = 0; Rank(i) <= top_rank; ++i) chain.push_back(l.chief_element(i));
  const auto all = l.elements();
  for (const auto& m : chain)
    if (!rank_modular_against(l, m, all))
      throw std::logic_error("chief chain element " + l.format(m) + " is not rank modular");
  if (!is_saturated_chain(l, chain)) throw std::logic_error("chief chain is not saturated");
  return ChainSample<element_t<L>>::build(l, chain);
}

}  // namespace rgl
