#include "tlab/simple_game.hpp"

#include <algorithm>
#include <stdexcept>

namespace tlab {

SimpleGame::SimpleGame(int n, std::vector<Coalition> minimal_winning)
    : n_(n), min_winning_(std::move(minimal_winning)) {
  if (n_ < 1 || n_ > 64) throw std::invalid_argument("SimpleGame: n must be in 1..64");
  if (min_winning_.empty())
    throw std::invalid_argument("SimpleGame: empty winning family (improper game)");
  std::sort(min_winning_.begin(), min_winning_.end());
  min_winning_.erase(std::unique(min_winning_.begin(), min_winning_.end()),
                     min_winning_.end());
  Coalition all = Coalition::full(n_);
  for (const Coalition& m : min_winning_) {
    if (m.empty())
      throw std::invalid_argument("SimpleGame: empty coalition winning (improper game)");
    if (!m.subset_of(all))
      throw std::invalid_argument("SimpleGame: coalition mentions players >= n");
  }
  for (size_t a = 0; a < min_winning_.size(); ++a)
    for (size_t b = 0; b < min_winning_.size(); ++b)
      if (a != b && min_winning_[a].subset_of(min_winning_[b]))
        throw std::invalid_argument("SimpleGame: minimal winning family is not an antichain");
}

bool is_winning(const SimpleGame& game, const Coalition& s) {
  for (const Coalition& m : game.minimal_winning())
    if (m.subset_of(s)) return true;
  return false;
}

std::vector<Coalition> maximal_losing(const SimpleGame& game) {
  const int n = game.n();
  if (n > 24)
    throw std::invalid_argument("maximal_losing: exhaustive scan limited to n <= 24");
  const uint64_t N = uint64_t{1} << n;
  std::vector<uint8_t> win(N, 0);
  for (const Coalition& m : game.minimal_winning()) win[m.bits()] = 1;
  for (uint64_t s = 1; s < N; ++s) {
    if (win[s]) continue;
    uint64_t b = s;
    while (b) {
      uint64_t low = b & (~b + 1);
      if (win[s ^ low]) { win[s] = 1; break; }
      b ^= low;
    }
  }
  std::vector<Coalition> out;
  for (uint64_t s = 0; s < N; ++s) {
    if (win[s]) continue;
    bool maximal = true;
    for (int i = 0; i < n && maximal; ++i)
      if (!((s >> i) & 1) && !win[s | (uint64_t{1} << i)]) maximal = false;
    if (maximal) out.push_back(Coalition(s));
  }
  return out;
}

bool dominates(const SimpleGame& game, int i, int j) {
  // Sufficient to test minimal winning coalitions containing j but not i:
  // monotonicity lifts the conclusion to every winning coalition.
  for (const Coalition& m : game.minimal_winning()) {
    if (!m.contains(j) || m.contains(i)) continue;
    if (!is_winning(game, m.without(j).with(i))) return false;
  }
  return true;
}

DominanceVerdict dominance(const SimpleGame& game, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= game.n() || j >= game.n())
    throw std::invalid_argument("dominance: players must be distinct and < n");
  bool left = dominates(game, i, j);
  bool right = dominates(game, j, i);
  if (left && right) return DominanceVerdict::Equivalent;
  if (left) return DominanceVerdict::LeftDominates;
  if (right) return DominanceVerdict::RightDominates;
  return DominanceVerdict::Incomparable;
}

TypeVec PlayerPartition::type_of(const Coalition& s) const {
  TypeVec out(classes.size(), 0);
  for (size_t k = 0; k < classes.size(); ++k)
    for (int p : classes[k])
      if (s.contains(p)) ++out[k];
  return out;
}

PlayerPartition partition_players(const SimpleGame& game) {
  const int n = game.n();
  PlayerPartition part;
  std::vector<int> reps;
  for (int p = 0; p < n; ++p) {
    bool placed = false;
    for (size_t c = 0; c < reps.size() && !placed; ++c) {
      if (dominance(game, p, reps[c]) == DominanceVerdict::Equivalent) {
        part.classes[c].push_back(p);
        placed = true;
      }
    }
    if (!placed) {
      part.classes.push_back({p});
      reps.push_back(p);
    }
  }

  bool total = true;
  for (size_t a = 0; a < reps.size() && total; ++a)
    for (size_t b = a + 1; b < reps.size() && total; ++b)
      if (dominance(game, reps[a], reps[b]) == DominanceVerdict::Incomparable) total = false;
  part.totally_ordered = total;

  std::vector<size_t> order(part.classes.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  if (total) {
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      return dominance(game, reps[a], reps[b]) == DominanceVerdict::LeftDominates;
    });
  } else {
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      if (part.classes[a].size() != part.classes[b].size())
        return part.classes[a].size() > part.classes[b].size();
      return part.classes[a].front() < part.classes[b].front();
    });
  }
  std::vector<std::vector<int>> sorted;
  for (size_t i : order) sorted.push_back(std::move(part.classes[i]));
  part.classes = std::move(sorted);
  return part;
}

bool is_complete(const SimpleGame& game) {
  for (int i = 0; i < game.n(); ++i)
    for (int j = i + 1; j < game.n(); ++j)
      if (dominance(game, i, j) == DominanceVerdict::Incomparable) return false;
  return true;
}

std::optional<SwapCertificate> swap_certificate(const SimpleGame& game) {
  for (int i = 0; i < game.n(); ++i) {
    for (int j = i + 1; j < game.n(); ++j) {
      if (dominance(game, i, j) != DominanceVerdict::Incomparable) continue;
      // Both directions fail, so each has a minimal winning witness.
      std::optional<Coalition> x1, x2;
      for (const Coalition& m : game.minimal_winning()) {
        if (!x1 && m.contains(i) && !m.contains(j) &&
            !is_winning(game, m.without(i).with(j)))
          x1 = m;
        if (!x2 && m.contains(j) && !m.contains(i) &&
            !is_winning(game, m.without(j).with(i)))
          x2 = m;
        if (x1 && x2) break;
      }
      if (x1 && x2) return SwapCertificate{*x1, *x2, i, j};
    }
  }
  return std::nullopt;
}

TrivialPlayers trivial_players(const SimpleGame& game) {
  uint64_t veto = ~uint64_t{0};
  uint64_t used = 0;
  for (const Coalition& m : game.minimal_winning()) {
    veto &= m.bits();
    used |= m.bits();
  }
  return TrivialPlayers{Coalition(veto), Coalition(Coalition::full(game.n()).bits() & ~used)};
}

ReducedGame reduce_trivial(const SimpleGame& game) {
  std::vector<int> kept(game.n());
  for (int p = 0; p < game.n(); ++p) kept[p] = p;
  SimpleGame cur = game;

  while (true) {
    TrivialPlayers triv = trivial_players(cur);
    uint64_t drop = triv.vetoers.bits() | triv.nulls.bits();
    if (drop == 0) return ReducedGame{std::move(cur), std::move(kept)};

    std::vector<int> next_kept;
    std::vector<int> remap(cur.n(), -1);
    for (int p = 0; p < cur.n(); ++p) {
      if ((drop >> p) & 1) continue;
      remap[p] = (int)next_kept.size();
      next_kept.push_back(kept[p]);
    }
    if (next_kept.empty()) return ReducedGame{std::nullopt, {}};

    std::vector<Coalition> rows;
    for (const Coalition& m : cur.minimal_winning()) {
      uint64_t bits = 0;
      for (int p : m.members())
        if (remap[p] >= 0) bits |= uint64_t{1} << remap[p];
      if (bits == 0) return ReducedGame{std::nullopt, {}}; // unanimity core
      rows.push_back(Coalition(bits));
    }
    cur = SimpleGame((int)next_kept.size(), std::move(rows));
    kept = std::move(next_kept);
  }
}

std::vector<Coalition> shift_minimal_winning(const SimpleGame& game) {
  PlayerPartition part = partition_players(game);
  if (!part.totally_ordered)
    throw std::invalid_argument("shift_minimal_winning: requires complete game");
  const int t = part.t();

  // A type is winning iff its lowest-index representative coalition is.
  auto representative = [&](const TypeVec& s) {
    Coalition c;
    for (int k = 0; k < t; ++k)
      for (int i = 0; i < s[k]; ++i) c = c.with(part.classes[k][i]);
    return c;
  };

  std::vector<Coalition> out;
  for (const Coalition& m : game.minimal_winning()) {
    TypeVec s = part.type_of(m);
    bool shift_min = true;
    for (int k = 0; k + 1 < t && shift_min; ++k) {
      if (s[k] == 0 || s[k + 1] >= (int)part.classes[k + 1].size()) continue;
      TypeVec shifted = s;
      --shifted[k];
      ++shifted[k + 1];
      if (is_winning(game, representative(shifted))) shift_min = false;
    }
    if (shift_min) out.push_back(m);
  }
  return out;
}

} // namespace tlab
