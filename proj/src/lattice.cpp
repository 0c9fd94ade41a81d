#include "tlab/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tlab {

TypeLattice::TypeLattice(const TypeVec& nbar) : nbar_(nbar), t_((int)nbar.size()) {
  if (t_ == 0) throw std::invalid_argument("TypeLattice: empty nbar");
  long long sz = 1;
  stride_.resize(t_);
  for (int k = t_ - 1; k >= 0; --k) {
    if (nbar_[k] <= 0) throw std::invalid_argument("TypeLattice: class sizes must be positive");
    stride_[k] = (int)sz;
    sz *= nbar_[k] + 1;
    if (sz > 8'000'000) throw std::invalid_argument("TypeLattice: lattice too large");
  }
  size_ = (int)sz;

  psum_.resize((size_t)size_ * t_);
  low_.assign((size_t)size_ * t_, -1);
  up_.assign((size_t)size_ * t_, -1);

  std::vector<long long> total(size_);
  TypeVec s(t_, 0);
  for (int id = 0; id < size_; ++id) {
    long long acc = 0, tot = 0;
    for (int k = 0; k < t_; ++k) {
      acc += s[k];
      psum_[(size_t)id * t_ + k] = acc;
      tot += acc;
    }
    total[id] = tot;
    for (int k = 0; k < t_; ++k) {
      // Lower cover at k < t: shift one member from class k to class k+1;
      // at k = t-1 (last slot): drop one member of the last class. Upper
      // covers reverse the step. Id arithmetic follows the mixed radix.
      if (k + 1 < t_) {
        if (s[k] >= 1 && s[k + 1] < nbar_[k + 1])
          low_[(size_t)id * t_ + k] = id - stride_[k] + stride_[k + 1];
        if (s[k] < nbar_[k] && s[k + 1] >= 1)
          up_[(size_t)id * t_ + k] = id + stride_[k] - stride_[k + 1];
      } else {
        if (s[k] >= 1) low_[(size_t)id * t_ + k] = id - stride_[k];
        if (s[k] < nbar_[k]) up_[(size_t)id * t_ + k] = id + stride_[k];
      }
    }
    for (int k = t_ - 1; k >= 0; --k) { // next type in mixed-radix order
      if (s[k] < nbar_[k]) { ++s[k]; break; }
      s[k] = 0;
    }
  }

  by_level_.resize(size_);
  std::iota(by_level_.begin(), by_level_.end(), 0);
  std::stable_sort(by_level_.begin(), by_level_.end(),
                   [&](int a, int b) { return total[a] < total[b]; });

  // Mixed-radix id order is ascending lex on counts, so descending ids give
  // the canonical row order.
  desc_order_.resize(size_);
  for (int i = 0; i < size_; ++i) desc_order_[i] = size_ - 1 - i;
}

int TypeLattice::id_of(const TypeVec& s) const {
  if ((int)s.size() != t_) throw std::invalid_argument("TypeLattice: wrong type length");
  int id = 0;
  for (int k = 0; k < t_; ++k) {
    if (s[k] < 0 || s[k] > nbar_[k]) throw std::out_of_range("TypeLattice: type out of range");
    id += s[k] * stride_[k];
  }
  return id;
}

bool TypeLattice::contains(const TypeVec& s) const {
  if ((int)s.size() != t_) return false;
  for (int k = 0; k < t_; ++k)
    if (s[k] < 0 || s[k] > nbar_[k]) return false;
  return true;
}

TypeVec TypeLattice::type_of(int id) const {
  TypeVec s(t_);
  for (int k = 0; k < t_; ++k) {
    s[k] = id / stride_[k];
    id -= s[k] * stride_[k];
  }
  return s;
}

bool TypeLattice::dominates_eq_ids(int a, int b) const {
  const long long* pa = &psum_[(size_t)a * t_];
  const long long* pb = &psum_[(size_t)b * t_];
  for (int k = 0; k < t_; ++k)
    if (pa[k] < pb[k]) return false;
  return true;
}

void LatticeGame::assign(const std::vector<int>& row_ids) {
  const TypeLattice& L = *L_;
  const int t = L.t();
  rows_ = row_ids;
  winning_.assign(L.size(), 0);
  for (int id : rows_) winning_[id] = 1;

  for (int id : L.grading_order()) {
    if (winning_[id]) continue;
    for (int k = 0; k < t; ++k) {
      int c = L.lower_cover(id, k);
      if (c >= 0 && winning_[c]) { winning_[id] = 1; break; }
    }
  }

  min_winning_.clear();
  losing_.clear();
  shift_max_losing_.clear();
  for (int id : L.row_order()) {
    if (winning_[id]) {
      // Minimal iff dropping one member of any class loses. A componentwise
      // decrement at k is a chain of covers ending in a class-size drop; it
      // stays in the lattice iff psum strictly rises from k-1 to k.
      bool minimal = true;
      long long prev = 0;
      for (int k = 0; k < t && minimal; ++k) {
        long long cur = L.psum(id, k);
        if (cur > prev) { // s_k >= 1
          int dec = id - L.stride(k);
          if (winning_[dec]) minimal = false;
        }
        prev = cur;
      }
      if (minimal) min_winning_.push_back(id);
    } else {
      losing_.push_back(id);
      bool shift_max = true;
      for (int k = 0; k < t && shift_max; ++k) {
        int u = L.upper_cover(id, k);
        if (u >= 0 && !winning_[u]) shift_max = false;
      }
      if (shift_max) shift_max_losing_.push_back(id);
    }
  }
}

} // namespace tlab
