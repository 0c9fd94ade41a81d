#include "tlab/trades.hpp"

#include "tlab/weights.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace tlab {

VectorialTrade make_vectorial(const std::vector<TypeVec>& pre,
                              const std::vector<TypeVec>& post) {
  auto group = [](std::vector<TypeVec> side) {
    std::sort(side.begin(), side.end(), row_order_less);
    std::vector<std::pair<TypeVec, int>> out;
    for (auto& t : side) {
      if (!out.empty() && out.back().first == t) ++out.back().second;
      else out.emplace_back(t, 1);
    }
    return out;
  };
  VectorialTrade v;
  v.pre = group(pre);
  v.post = group(post);
  return v;
}

TransformVerdict verify_transform(const SimpleGame& game, const TradingTransform& t) {
  if (t.pre.empty() || t.pre.size() != t.post.size()) return TransformVerdict::Unbalanced;
  for (int p = 0; p < game.n(); ++p) {
    int cpre = 0, cpost = 0;
    for (const Coalition& c : t.pre) cpre += c.contains(p);
    for (const Coalition& c : t.post) cpost += c.contains(p);
    if (cpre != cpost) return TransformVerdict::Unbalanced;
  }
  for (const Coalition& c : t.pre)
    if (!is_winning(game, c)) return TransformVerdict::BalancedNotCertificate;
  for (const Coalition& c : t.post)
    if (is_winning(game, c)) return TransformVerdict::BalancedNotCertificate;
  return TransformVerdict::ValidCertificate;
}

bool verify_vectorial(const CharacteristicInvariants& ci, const VectorialTrade& v,
                      TradeMode mode) {
  const int t = ci.t();
  int jpre = 0, jpost = 0;
  for (auto& [type, mult] : v.pre) {
    if ((int)type.size() != t || mult <= 0)
      throw std::invalid_argument("verify_vectorial: malformed pre side");
    for (int k = 0; k < t; ++k)
      if (type[k] < 0 || type[k] > ci.nbar[k])
        throw std::invalid_argument("verify_vectorial: pre type outside the lattice");
    jpre += mult;
  }
  for (auto& [type, mult] : v.post) {
    if ((int)type.size() != t || mult <= 0)
      throw std::invalid_argument("verify_vectorial: malformed post side");
    for (int k = 0; k < t; ++k)
      if (type[k] < 0 || type[k] > ci.nbar[k])
        throw std::invalid_argument("verify_vectorial: post type outside the lattice");
    jpost += mult;
  }
  if (jpre == 0) throw std::invalid_argument("verify_vectorial: empty trade (j >= 1 required)");
  if (jpre != jpost) return false;

  for (int k = 0; k < t; ++k) {
    long long spre = 0, spost = 0;
    for (auto& [type, mult] : v.pre) spre += (long long)type[k] * mult;
    for (auto& [type, mult] : v.post) spost += (long long)type[k] * mult;
    if (spre != spost) return false;
  }
  for (auto& [type, mult] : v.pre) {
    (void)mult;
    if (!winning_type(ci, type)) return false;
    if (mode == TradeMode::InvariantTrade &&
        std::find(ci.rows.begin(), ci.rows.end(), type) == ci.rows.end())
      return false;
  }
  for (auto& [type, mult] : v.post) {
    (void)mult;
    if (winning_type(ci, type)) return false;
  }
  return true;
}

namespace {

// Realizes per-slot multiplicities (a_i on one side, b_i on the other, equal
// sums) by concrete member subsets of {1..m} with equal per-player appearance
// counts. Recursive construction: match a pair of equal counts outright, or
// peel one unit off every maximal-count slot on both sides and hand the
// freed player to those slots.
struct SlotCount {
  int count;
  int slot;
  bool operator<(const SlotCount& o) const {
    if (count != o.count) return count > o.count;
    return slot < o.slot;
  }
};

void lemma_assign(std::vector<SlotCount> a, std::vector<SlotCount> b,
                  std::vector<uint64_t>& amask, std::vector<uint64_t>& bmask) {
  std::erase_if(a, [](const SlotCount& s) { return s.count == 0; });
  std::erase_if(b, [](const SlotCount& s) { return s.count == 0; });
  if (a.empty() && b.empty()) return;
  assert(!a.empty() && !b.empty());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());

  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      if (a[i].count == b[j].count) {
        uint64_t bits = (a[i].count == 64) ? ~uint64_t{0} : ((uint64_t{1} << a[i].count) - 1);
        amask[a[i].slot] |= bits;
        bmask[b[j].slot] |= bits;
        a.erase(a.begin() + i);
        b.erase(b.begin() + j);
        lemma_assign(std::move(a), std::move(b), amask, bmask);
        return;
      }

  bool a_big = a[0].count > b[0].count;
  std::vector<SlotCount>& big = a_big ? a : b;
  std::vector<SlotCount>& small = a_big ? b : a;
  std::vector<uint64_t>& bigmask = a_big ? amask : bmask;
  std::vector<uint64_t>& smallmask = a_big ? bmask : amask;

  const int m = big[0].count;
  size_t l = 0;
  while (l < big.size() && big[l].count == m) ++l;
  assert(small.size() >= l); // equal sums force enough slots on the other side
  uint64_t player_bit = uint64_t{1} << (m - 1);
  for (size_t i = 0; i < l; ++i) {
    bigmask[big[i].slot] |= player_bit;
    --big[i].count;
    smallmask[small[i].slot] |= player_bit;
    --small[i].count;
  }
  lemma_assign(std::move(a), std::move(b), amask, bmask);
}

} // namespace

TradingTransform expand_vectorial(const VectorialTrade& v, const PlayerPartition& partition) {
  const int t = partition.t();
  std::vector<TypeVec> pre, post;
  for (auto& [type, mult] : v.pre)
    for (int i = 0; i < mult; ++i) pre.push_back(type);
  for (auto& [type, mult] : v.post)
    for (int i = 0; i < mult; ++i) post.push_back(type);
  if (pre.empty() || pre.size() != post.size())
    throw std::invalid_argument("expand_vectorial: sides must have equal positive length");
  for (const TypeVec& s : pre)
    if ((int)s.size() != t) throw std::invalid_argument("expand_vectorial: type length mismatch");
  for (int k = 0; k < t; ++k) {
    long long spre = 0, spost = 0;
    for (const TypeVec& s : pre) spre += s[k];
    for (const TypeVec& s : post) spost += s[k];
    if (spre != spost) throw std::invalid_argument("expand_vectorial: unbalanced trade");
    for (const TypeVec& s : pre)
      if (s[k] < 0 || s[k] > (int)partition.classes[k].size())
        throw std::invalid_argument("expand_vectorial: count exceeds class size");
    for (const TypeVec& s : post)
      if (s[k] < 0 || s[k] > (int)partition.classes[k].size())
        throw std::invalid_argument("expand_vectorial: count exceeds class size");
  }

  const size_t j = pre.size();
  std::vector<uint64_t> premask(j, 0), postmask(j, 0);
  for (int k = 0; k < t; ++k) {
    std::vector<SlotCount> a, b;
    for (size_t i = 0; i < j; ++i) a.push_back({pre[i][k], (int)i});
    for (size_t i = 0; i < j; ++i) b.push_back({post[i][k], (int)i});
    std::vector<uint64_t> am(j, 0), bm(j, 0);
    lemma_assign(std::move(a), std::move(b), am, bm);
    // bit p of am[i] = (p+1)-th member of class k
    for (size_t i = 0; i < j; ++i) {
      uint64_t bits = am[i];
      while (bits) {
        int p = std::countr_zero(bits);
        bits &= bits - 1;
        premask[i] |= uint64_t{1} << partition.classes[k][p];
      }
      bits = bm[i];
      while (bits) {
        int p = std::countr_zero(bits);
        bits &= bits - 1;
        postmask[i] |= uint64_t{1} << partition.classes[k][p];
      }
    }
  }

  TradingTransform out;
  for (size_t i = 0; i < j; ++i) {
    out.pre.emplace_back(premask[i]);
    out.post.emplace_back(postmask[i]);
  }
  return out;
}

namespace {

// Depth-first decomposition of `target` into `count` losing types drawn (with
// repetition, non-increasing candidate index) from `cands`. Failed states are
// memoized on (candidate index, count, target) packed into 64 bits when the
// component ranges allow it.
struct Decomposer {
  const TypeLattice& L;
  const std::vector<int>& cands; // candidate ids, descending row order
  int t;
  bool packable = false;
  int idx_bits = 0, cnt_bits = 0;
  std::vector<int> comp_bits;
  std::unordered_set<uint64_t> failed;
  std::set<std::vector<int>> failed_wide;

  Decomposer(const LatticeGame& g, const std::vector<int>& candidates, int maxj)
      : L(g.lattice()), cands(candidates), t(g.lattice().t()) {
    comp_bits.resize(t);
    int bits = 0;
    auto width = [](long long v) {
      int b = 1;
      while ((1LL << b) <= v) ++b;
      return b;
    };
    for (int k = 0; k < t; ++k) {
      comp_bits[k] = width((long long)maxj * L.nbar()[k]);
      bits += comp_bits[k];
    }
    idx_bits = width((long long)cands.size() + 1);
    cnt_bits = width(maxj);
    packable = bits + idx_bits + cnt_bits <= 64;
  }

  uint64_t pack(size_t idx, int count, const TypeVec& target) const {
    uint64_t key = idx;
    key = (key << cnt_bits) | (uint64_t)count;
    for (int k = 0; k < t; ++k) key = (key << comp_bits[k]) | (uint64_t)target[k];
    return key;
  }

  bool known_failure(size_t idx, int count, const TypeVec& target) {
    if (packable) return failed.count(pack(idx, count, target)) > 0;
    std::vector<int> key(target);
    key.push_back((int)idx);
    key.push_back(count);
    return failed_wide.count(key) > 0;
  }

  void remember_failure(size_t idx, int count, const TypeVec& target) {
    if (packable) failed.insert(pack(idx, count, target));
    else {
      std::vector<int> key(target);
      key.push_back((int)idx);
      key.push_back(count);
      failed_wide.insert(key);
    }
  }

  // target must stay componentwise in [0, count * nbar].
  bool feasible_bound(const TypeVec& target, int count) const {
    for (int k = 0; k < t; ++k)
      if (target[k] > count * L.nbar()[k]) return false;
    return true;
  }

  bool run(size_t idx, int count, TypeVec& target, std::vector<int>& chosen) {
    if (count == 0) {
      for (int k = 0; k < t; ++k)
        if (target[k] != 0) return false;
      return true;
    }
    if (!feasible_bound(target, count)) return false;
    if (known_failure(idx, count, target)) return false;
    for (size_t i = idx; i < cands.size(); ++i) {
      int id = cands[i];
      bool fits = true;
      for (int k = 0; k < t && fits; ++k)
        if (L.count_of(id, k) > target[k]) fits = false;
      if (!fits) continue;
      for (int k = 0; k < t; ++k) target[k] -= L.count_of(id, k);
      chosen.push_back(id);
      if (run(i, count - 1, target, chosen)) return true;
      chosen.pop_back();
      for (int k = 0; k < t; ++k) target[k] += L.count_of(id, k);
    }
    remember_failure(idx, count, target);
    return false;
  }
};

std::vector<int> post_candidates(const LatticeGame& g, const SearchOptions& opts) {
  if (!opts.post_maximal_losing) return g.losing();
  const TypeLattice& L = g.lattice();
  std::vector<int> out;
  for (int id : g.losing()) {
    bool maximal = true;
    for (int k = 0; k < L.t() && maximal; ++k)
      if (L.count_of(id, k) < L.nbar()[k] && !g.winning(id + L.stride(k))) maximal = false;
    if (maximal) out.push_back(id);
  }
  return out;
}

} // namespace

std::optional<std::pair<int, VectorialTrade>>
find_failure_on(const LatticeGame& g, TradeMode mode, int max_k, const SearchOptions& opts) {
  const TypeLattice& L = g.lattice();
  const int t = L.t();
  const std::vector<int>& pre_cands =
      (mode == TradeMode::InvariantTrade) ? g.rows() : g.minimal_winning();
  std::vector<int> post_cands = post_candidates(g, opts);
  if (pre_cands.empty() || post_cands.empty()) return std::nullopt;

  std::vector<int> pre_stack;
  TypeVec target(t, 0);

  for (int j = 2; j <= max_k; ++j) {
    Decomposer dec(g, post_cands, j);

    // Pre multisets as non-decreasing candidate positions.
    std::vector<int> chosen_post;
    auto search = [&](auto&& self, size_t from, int remaining) -> bool {
      if (remaining == 0) {
        // Fast path for pairs; general DFS otherwise.
        if (j == 2 && !opts.post_maximal_losing) {
          for (size_t i = 0; i < post_cands.size(); ++i) {
            int id1 = post_cands[i];
            bool fits = true;
            int id2 = 0;
            for (int k = 0; k < t && fits; ++k) {
              int rem = target[k] - L.count_of(id1, k);
              if (rem < 0 || rem > L.nbar()[k]) fits = false;
              else id2 += rem * L.stride(k);
            }
            if (!fits || id2 > id1) continue;
            if (!g.winning(id2)) {
              chosen_post = {id1, id2};
              return true;
            }
          }
          return false;
        }
        chosen_post.clear();
        return dec.run(0, j, target, chosen_post);
      }
      for (size_t i = from; i < pre_cands.size(); ++i) {
        int id = pre_cands[i];
        for (int k = 0; k < t; ++k) target[k] += L.count_of(id, k);
        pre_stack.push_back(id);
        if (self(self, i, remaining - 1)) return true;
        pre_stack.pop_back();
        for (int k = 0; k < t; ++k) target[k] -= L.count_of(id, k);
      }
      return false;
    };

    if (search(search, 0, j)) {
      std::vector<TypeVec> pre, post;
      for (int id : pre_stack) pre.push_back(L.type_of(id));
      for (int id : chosen_post) post.push_back(L.type_of(id));
      return std::make_pair(j, make_vectorial(pre, post));
    }
  }
  return std::nullopt;
}

RobustnessReport find_failure(const CharacteristicInvariants& ci, TradeMode mode,
                              int max_k, const SearchOptions& opts) {
  if (max_k < 2) throw std::invalid_argument("find_failure: max_k must be >= 2");
  InvariantsValidation v = validate_invariants(ci);
  if (!v.valid)
    throw std::invalid_argument("find_failure: invalid invariants: " + v.violations.front());

  TypeLattice L(ci.nbar);
  LatticeGame g(L);
  g.assign(row_ids(ci, L));

  RobustnessReport rep;
  rep.mode = mode;
  rep.max_k_searched = max_k;
  auto found = find_failure_on(g, mode, max_k, opts);
  if (found) {
    rep.fails_at = found->first;
    rep.certificate = std::move(found->second);
    if (!verify_vectorial(ci, *rep.certificate, mode))
      throw std::logic_error("find_failure: produced certificate failed verification");
  }
  return rep;
}

std::pair<std::optional<int>, std::optional<int>>
min_failure_pair(const CharacteristicInvariants& ci, int cap) {
  if (decide_weighted(ci))
    throw std::invalid_argument("min_failure_pair: game is weighted");
  auto trade = find_failure(ci, TradeMode::Trade, cap);
  auto invariant = find_failure(ci, TradeMode::InvariantTrade, cap);
  return {trade.fails_at, invariant.fails_at};
}

} // namespace tlab
