// families.hpp
// Deterministic generators for the named games and parametric families used
// throughout the test and conjecture machinery, emitted as characteristic
// invariants ready for the other modules.

#pragma once

#include "tlab/invariants.hpp"
#include "tlab/trades.hpp"

#include <map>
#include <string>

namespace tlab {

// Families, by name (parameters in parentheses):
//   unsc                          (5,10) with row (5 4)
//   canada                        (2,8) with row (1 6)
//   fm_smallest                   (2,2,3) with rows (2,1,0),(1,0,3)
//   lemma_5_1(m)                  (2,m,m), rows (2,0,1),(1,1,m-1); m >= 3
//   lemma_5_2(m)                  (2,m,m), 4 rows; m >= 3
//   lemma_6_1_first(k1,k2,k3,l)   3-class family, 2-trade robust, fails at 3
//   lemma_6_1_second(k1,k2,l)     second sub-family of the same boundary
//   n11_matrices(i)               (3,3,5) with matrix M_i, i in 1..4
//   t4_n9                         (1,2,3,3), 5 rows
struct FamilySpec {
  std::string name;
  std::map<std::string, long long> params;
};

CharacteristicInvariants generate(const FamilySpec& spec);

// Pads the game with one new class of two players: veto players in front
// when the base has no vetoers, null players at the back otherwise. Either
// padding preserves the m-robust / (m+1)-failing boundary in both modes,
// keeps r unchanged, and raises t by one.
CharacteristicInvariants lift_types(const CharacteristicInvariants& base, TradeMode mode);

// Membership test for the two lemma_6_1 sub-families (used by the conjecture
// scans): true iff some parameter choice reproduces the invariants exactly.
bool is_lemma_6_1_instance(const CharacteristicInvariants& ci);

} // namespace tlab
