// lattice.hpp
// Dense representation of the coalition-type lattice Lambda(nbar) under the
// partial-sum dominance order, plus the per-game winning/losing classification
// on top of it.
//
// Types are addressed by a mixed-radix id. Cover edges of the dominance order
// are precomputed once per nbar and shared by every game enumerated on it:
//   lower cover of s at position k < t:  (s_k - 1, s_{k+1} + 1)
//   lower cover at position t:           s_t - 1
// Every cover step lowers the prefix-sum total by exactly one, which gives the
// grading used to evaluate winning flags bottom-up.

#pragma once

#include "tlab/types.hpp"

#include <cstdint>
#include <vector>

namespace tlab {

class TypeLattice {
public:
  explicit TypeLattice(const TypeVec& nbar);

  int t() const { return t_; }
  int size() const { return size_; }
  const TypeVec& nbar() const { return nbar_; }

  int id_of(const TypeVec& s) const;
  bool contains(const TypeVec& s) const;
  TypeVec type_of(int id) const;

  // Mixed-radix stride of component k (id delta for one member of class k).
  int stride(int k) const { return stride_[k]; }
  int count_of(int id, int k) const { return id / stride_[k] % (nbar_[k] + 1); }

  // Prefix sums of type `id`, component k.
  long long psum(int id, int k) const { return psum_[(size_t)id * t_ + k]; }

  // a ⪰ b (weak dominance) between lattice members.
  bool dominates_eq_ids(int a, int b) const;

  // Lower/upper cover ids, -1 where the step leaves the lattice. Slot k < t
  // is the shift at position k, slot t-1 ... see header note.
  int lower_cover(int id, int k) const { return low_[(size_t)id * t_ + k]; }
  int upper_cover(int id, int k) const { return up_[(size_t)id * t_ + k]; }

  // All ids ordered by ascending prefix-sum total (a linear extension of the
  // dominance order; safe processing order for upward closures).
  const std::vector<int>& grading_order() const { return by_level_; }

  // All ids in canonical row order (descending lex).
  const std::vector<int>& row_order() const { return desc_order_; }

  int top_id() const { return size_ - 1; }    // nbar itself
  int bottom_id() const { return 0; }         // all-zero type

private:
  TypeVec nbar_;
  int t_;
  int size_;
  std::vector<int> stride_;
  std::vector<long long> psum_;
  std::vector<int> low_;
  std::vector<int> up_;
  std::vector<int> by_level_;
  std::vector<int> desc_order_;
};

// Winning/losing classification of a single game (given by its shift-minimal
// winning rows) over a shared lattice. Scratch object, reusable per game.
class LatticeGame {
public:
  explicit LatticeGame(const TypeLattice& L) : L_(&L) {}

  // rows: lattice ids of the shift-minimal winning types (an antichain).
  void assign(const std::vector<int>& row_ids);

  const TypeLattice& lattice() const { return *L_; }
  bool winning(int id) const { return winning_[id] != 0; }

  const std::vector<int>& rows() const { return rows_; }
  // Componentwise-minimal winning types, descending row order.
  const std::vector<int>& minimal_winning() const { return min_winning_; }
  // All losing ids, descending row order.
  const std::vector<int>& losing() const { return losing_; }
  // Shift-maximal losing types (losing with all upper covers winning).
  const std::vector<int>& shift_maximal_losing() const { return shift_max_losing_; }

private:
  const TypeLattice* L_;
  std::vector<int> rows_;
  std::vector<uint8_t> winning_;
  std::vector<int> min_winning_;
  std::vector<int> losing_;
  std::vector<int> shift_max_losing_;
};

} // namespace tlab
