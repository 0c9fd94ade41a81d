// trades.hpp
// Trading transforms and their type-level (vectorial) counterparts:
// certificate verification, expansion from type multiplicities to explicit
// player-level trades, and bounded search for the smallest k at which k-trade
// or k-invariant-trade robustness fails.

#pragma once

#include "tlab/invariants.hpp"
#include "tlab/lattice.hpp"
#include "tlab/simple_game.hpp"
#include "tlab/types.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace tlab {

enum class TradeMode { Trade, InvariantTrade };

// Explicit coalition-level trade: per-player appearance counts must agree
// between the pre and post side.
struct TradingTransform {
  std::vector<Coalition> pre;
  std::vector<Coalition> post;
};

enum class TransformVerdict { ValidCertificate, BalancedNotCertificate, Unbalanced };

// Type-level trade with multiplicities; canonical form keeps both sides in
// descending row order.
struct VectorialTrade {
  std::vector<std::pair<TypeVec, int>> pre;
  std::vector<std::pair<TypeVec, int>> post;

  int length() const {
    int j = 0;
    for (auto& [t, m] : pre) j += m;
    return j;
  }
};

VectorialTrade make_vectorial(const std::vector<TypeVec>& pre,
                              const std::vector<TypeVec>& post);

struct RobustnessReport {
  TradeMode mode = TradeMode::Trade;
  int max_k_searched = 0;
  std::optional<int> fails_at;               // smallest failing k, if any
  std::optional<VectorialTrade> certificate; // verified before returning
  bool robust() const { return !fails_at.has_value(); }
};

// Certificate check against an explicit game: balance, all pre winning, all
// post losing.
TransformVerdict verify_transform(const SimpleGame& game, const TradingTransform& t);

// Certificate check at type level. Pre types must be winning; in invariant
// mode they must be rows of M. Throws on empty trades or malformed types.
bool verify_vectorial(const CharacteristicInvariants& ci, const VectorialTrade& v,
                      TradeMode mode);

// Lemma-style expansion of a balanced vectorial trade into a player-level
// transform: per equivalence class, multiplicity vectors are realized by
// concrete member sets with matching per-player appearance counts.
TradingTransform expand_vectorial(const VectorialTrade& v, const PlayerPartition& partition);

struct SearchOptions {
  // Research toggle: restrict the post side to componentwise-maximal losing
  // types as well (default keeps only the winning-side restriction).
  bool post_maximal_losing = false;
};

// Smallest j in [2, max_k] admitting a certificate, with the certificate,
// searching pre multisets over the minimal winning types (trade mode) or the
// rows of M (invariant mode) and decomposing the component-sum target into j
// losing types by memoized depth-first search.
RobustnessReport find_failure(const CharacteristicInvariants& ci, TradeMode mode,
                              int max_k, const SearchOptions& opts = {});

// Same search on a prepared lattice classification (enumeration fast path).
std::optional<std::pair<int, VectorialTrade>>
find_failure_on(const LatticeGame& game, TradeMode mode, int max_k,
                const SearchOptions& opts = {});

// Minimal failing k in both modes for a non-weighted game (throws on weighted
// input). Invariant-mode k is always >= trade-mode k.
std::pair<std::optional<int>, std::optional<int>>
min_failure_pair(const CharacteristicInvariants& ci, int cap);

} // namespace tlab
