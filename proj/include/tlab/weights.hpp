// weights.hpp
// Exact weightedness decisions for complete simple games given by their
// characteristic invariants: the strict separation system
//     (m_p - alpha_q) . w > 0,   w_1 > ... > w_t >= 0
// solved as a closed ">= 1" system over the rationals, plus the r=1 closed
// forms and the t=2 M/P criterion with its constructive 2-trade certificates.

#pragma once

#include "tlab/invariants.hpp"
#include "tlab/rational.hpp"
#include "tlab/types.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace tlab {

struct WeightedRepresentation {
  long long quota = 0;
  std::vector<long long> class_weights; // strictly descending for t >= 2
  TypeVec nbar;

  long long weight_of(const TypeVec& s) const {
    long long w = 0;
    for (size_t k = 0; k < s.size(); ++k) w += (long long)s[k] * class_weights[k];
    return w;
  }
};

// Integer weights with quota = minimum winning weight. Verifies strict
// separation over the whole type lattice before returning. Empty when the
// system is infeasible (a certificate of non-weightedness then comes from the
// trade search).
std::optional<WeightedRepresentation> decide_weighted(const CharacteristicInvariants& ci);

// Same decision on a prepared lattice classification (enumeration fast path).
std::optional<WeightedRepresentation> decide_weighted_on(const LatticeGame& g);

// Same decision for explicit games; non-complete games are never weighted.
std::optional<WeightedRepresentation> decide_weighted(const SimpleGame& game);

// Closed-form weights for r = 1, t = 2, no vetoers or nulls, m2 in {1, n2-1}.
// Anything else returns nullopt ("not covered"; fall back to decide_weighted).
std::optional<WeightedRepresentation> closed_form_r1(const CharacteristicInvariants& ci);

struct MPParameters {
  Rat64 M, P;
  // Witness pairs attaining the maxima, chosen with minimal c-a (for M) and
  // minimal d'-b' (for P), then lexicographically smallest.
  TypeVec m_winning, m_losing;   // M = (c-a)/(b-d) from (a,b) winning, (c,d) losing
  TypeVec p_winning, p_losing;   // P = (d'-b')/(a'-c')
  Rat64 product() const { return M * P; }
};

// Extremal exchange-rate quotients for t = 2, brute-forced over all
// winning/losing type pairs:
//   M = max over x' >= x of (x'-x)/(y-y'),  P = max over x' < x of (y'-y)/(x-x').
// Always 0 <= M < 1 and P >= 1.
MPParameters mp_parameters(const CharacteristicInvariants& ci);

// Weighted <=> M*P < 1 (exact rationals). t = 2 only.
bool mp_weighted_test(const CharacteristicInvariants& ci);

struct TypeTradePair {
  std::vector<TypeVec> pre;  // winning types (shift-minimal after lifting)
  std::vector<TypeVec> post; // losing types
};

// Constructive failure of 2-invariant-trade robustness for a non-weighted
// t = 2 game: builds the 2-trade from the M/P witnesses (cases by comparing
// c-a with a'-c'), then reduces and shifts the pre side until both types are
// shift-minimal, shifting a post type alongside each step to keep the balance.
// Throws std::logic_error when called on a weighted game.
TypeTradePair two_trade_certificate_t2(const CharacteristicInvariants& ci);

} // namespace tlab
