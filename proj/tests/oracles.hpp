// oracles.hpp
// Test-only reference implementations, kept independent of the library code
// paths they are used to check: exhaustive enumeration of monotone games,
// bounded brute-force weight search, and a layered-DP feasibility check for
// vectorial trades.

#pragma once

#include "tlab/enumeration.hpp"
#include "tlab/invariants.hpp"
#include "tlab/simple_game.hpp"
#include "tlab/trades.hpp"

#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace tlab::test {

// Every proper monotone game on n players (every non-empty antichain of
// non-empty coalitions), visited once. Feasible for n <= 5.
void for_all_monotone_games(int n, const std::function<void(const SimpleGame&)>& fn);

SimpleGame random_monotone_game(std::mt19937& rng, int n, int max_seeds);

// Exhaustive search for strictly descending integer class weights bounded by
// max_weight that separate winning from losing types. Winning classification
// is recomputed from the rows directly (no lattice machinery).
std::optional<std::vector<long long>> brute_force_weights(const CharacteristicInvariants& ci,
                                                          int max_weight);

// Layered-DP feasibility of a length-j vectorial trade: pre side from the
// minimal winning types (trade mode) or the rows (invariant mode), post side
// from all losing types, equal component sums. Independent of the search DFS.
bool dp_trade_feasible(const CharacteristicInvariants& ci, TradeMode mode, int j);

// All winning types of Lambda(nbar), decided row by row.
std::vector<TypeVec> winning_types_of(const CharacteristicInvariants& ci);
std::vector<TypeVec> losing_types_of(const CharacteristicInvariants& ci);
std::vector<TypeVec> minimal_winning_types_of(const CharacteristicInvariants& ci);

void for_all_types(const TypeVec& nbar, const std::function<void(const TypeVec&)>& fn);

} // namespace tlab::test
