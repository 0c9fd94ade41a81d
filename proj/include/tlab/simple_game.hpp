// simple_game.hpp
// Explicit monotone simple games on up to 64 players, stored by their minimal
// winning coalitions, plus the desirability machinery: dominance between
// players, equivalence classes, completeness, swap certificates, veto/null
// players and their removal, shift-minimal winning coalitions.
//
// All objects are immutable after construction and every operation is a pure
// function, so concurrent use on shared games needs no locking.

#pragma once

#include "tlab/coalition.hpp"
#include "tlab/types.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace tlab {

class SimpleGame {
public:
  // `minimal_winning` must be a non-empty antichain of non-empty coalitions
  // over players 0..n-1. Improper inputs (empty family, or the empty coalition
  // winning) are rejected: every result downstream presumes a proper game.
  SimpleGame(int n, std::vector<Coalition> minimal_winning);

  int n() const { return n_; }
  const std::vector<Coalition>& minimal_winning() const { return min_winning_; }

private:
  int n_;
  std::vector<Coalition> min_winning_; // sorted by mask value
};

enum class DominanceVerdict { LeftDominates, RightDominates, Equivalent, Incomparable };

struct PlayerPartition {
  std::vector<std::vector<int>> classes; // each sorted ascending
  // True when the class list is strictly descending in the desirability
  // order (always the case for complete games). Otherwise classes are sorted
  // by (size descending, smallest member ascending) as a canonical tie-break.
  bool totally_ordered = false;

  int t() const { return (int)classes.size(); }
  TypeVec class_sizes() const {
    TypeVec s;
    for (auto& c : classes) s.push_back((int)c.size());
    return s;
  }
  // Per-class member count of the coalition.
  TypeVec type_of(const Coalition& s) const;
};

struct SwapCertificate {
  Coalition x1, x2; // winning; x1 contains i not j, x2 contains j not i
  int i, j;         // swapping i and j turns both into losing coalitions
};

bool is_winning(const SimpleGame& game, const Coalition& s);

// Inclusion-maximal losing coalitions. Exhaustive over 2^n; limited to n <= 24.
std::vector<Coalition> maximal_losing(const SimpleGame& game);

// Desirability comparison of players i and j.
DominanceVerdict dominance(const SimpleGame& game, int i, int j);

// True iff i is at least as desirable as j.
bool dominates(const SimpleGame& game, int i, int j);

PlayerPartition partition_players(const SimpleGame& game);

bool is_complete(const SimpleGame& game);

// None iff the game is complete. Search is lexicographic over (i, j) and over
// the sorted minimal winning coalitions, so results are deterministic.
std::optional<SwapCertificate> swap_certificate(const SimpleGame& game);

struct TrivialPlayers {
  Coalition vetoers; // members of every winning coalition
  Coalition nulls;   // members of no minimal winning coalition
};
TrivialPlayers trivial_players(const SimpleGame& game);

// Result of removing veto and null players, iterated to a fixed point.
struct ReducedGame {
  std::optional<SimpleGame> game;   // empty = fully trivial, treat as weighted
  std::vector<int> kept_players;    // original indices of the remaining players
  bool fully_trivial() const { return !game.has_value(); }
};
ReducedGame reduce_trivial(const SimpleGame& game);

// Minimal winning coalitions that turn losing under every one-step shift
// (replace a member by a player from the next, strictly less desirable,
// class). Requires a complete game.
std::vector<Coalition> shift_minimal_winning(const SimpleGame& game);

} // namespace tlab
