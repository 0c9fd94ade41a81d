// invariants.hpp
// Characteristic invariants (nbar, M) of complete simple games: class sizes
// plus the matrix of shift-minimal winning coalition types. The pair is the
// canonical form - two complete games are isomorphic exactly when their
// invariants coincide - so equality of invariants is the isomorphism test.

#pragma once

#include "tlab/lattice.hpp"
#include "tlab/simple_game.hpp"
#include "tlab/types.hpp"

#include <string>
#include <vector>

namespace tlab {

struct CharacteristicInvariants {
  TypeVec nbar;                   // positive class sizes n_1..n_t
  std::vector<TypeVec> rows;      // shift-minimal winning types, row order

  int t() const { return (int)nbar.size(); }
  int r() const { return (int)rows.size(); }
  int n() const { long long s = 0; for (int v : nbar) s += v; return (int)s; }

  friend bool operator==(const CharacteristicInvariants& a,
                         const CharacteristicInvariants& b) {
    return a.nbar == b.nbar && a.rows == b.rows;
  }
  friend bool operator<(const CharacteristicInvariants& a,
                        const CharacteristicInvariants& b) {
    if (a.nbar != b.nbar) return a.nbar < b.nbar;
    return a.rows < b.rows;
  }
};

struct InvariantsValidation {
  bool valid = true;
  std::vector<std::string> violations;
};

// Checks, in order:
//   (i)   0 <= row <= nbar componentwise for every row
//   (ii)  rows pairwise incomparable under the dominance order
//   (iii) t = 1: m_{1,1} > 0; t > 1: for every k < t some row has
//         m_{p,k} > 0 and m_{p,k+1} < n_{k+1}
//   (iv)  rows listed in canonical (descending lex) order
InvariantsValidation validate_invariants(const CharacteristicInvariants& ci);

// Rows of the shift-maximal losing matrix Y: the maximal losing types, in
// canonical row order. Computed by a descending sweep of the lattice.
std::vector<TypeVec> shift_maximal_losing_types(const CharacteristicInvariants& ci);

// True iff sbar dominates some row of M. Throws on out-of-range sbar.
bool winning_type(const CharacteristicInvariants& ci, const TypeVec& sbar);

// Extraction from an explicit game. Requires a complete game; the returned
// partition lists the classes in strictly descending desirability order.
struct ExtractedInvariants {
  CharacteristicInvariants ci;
  PlayerPartition partition;
};
ExtractedInvariants extract_invariants(const SimpleGame& game);

// Explicit game on players 0..n-1 grouped consecutively by class; a coalition
// wins iff its type dominates some row of M. Inverse of extract_invariants up
// to isomorphism.
SimpleGame reconstruct(const CharacteristicInvariants& ci);

bool isomorphic(const SimpleGame& g1, const SimpleGame& g2);

// Lattice ids of the rows (helper shared by the classification code).
std::vector<int> row_ids(const CharacteristicInvariants& ci, const TypeLattice& L);

} // namespace tlab
