// enumeration.hpp
// Isomorphism-free generation of all complete simple games with n players as
// valid (nbar, M) pairs, classification by weightedness and minimal
// trade-robustness failure, counting-formula checks, and conjecture scans.
//
// Generation runs composition by composition; inside one composition the row
// sets are enumerated as antichains of the type lattice in canonical row
// order, so every game appears exactly once and already in canonical form.

#pragma once

#include "tlab/invariants.hpp"
#include "tlab/trades.hpp"
#include "tlab/weights.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tlab {

struct EnumFilter {
  std::optional<int> t;
  std::optional<int> r;
};

// Visits every valid (nbar, M) with class sizes summing to n, exactly once.
void enumerate_complete(int n, const EnumFilter& filter,
                        const std::function<void(const CharacteristicInvariants&)>& visit);

std::vector<CharacteristicInvariants> enumerate_complete(int n, const EnumFilter& filter = {});

struct ClassificationRecord {
  CharacteristicInvariants ci;
  int t = 0, r = 0;
  bool weighted = false;
  std::optional<int> k_trade_fail;
  std::optional<int> k_invariant_fail;
  std::optional<VectorialTrade> certificate; // for the first requested mode
};

struct ClassifyOptions {
  EnumFilter filter;
  int cap_k = 4;              // escalated to 6 for games robust at the cap
  bool trade_mode = true;
  bool invariant_mode = false;
  int threads = 1;
  // Called for every game when set (single-threaded runs preserve generation
  // order; with threads > 1 the order is unspecified).
  std::function<void(const ClassificationRecord&)> record_sink;
};

struct CountReport {
  int n = 0;
  EnumFilter filter;
  int cap_k = 4;
  long long total = 0;    // CG
  long long weighted = 0; // WG
  // fails_at[k] = games whose smallest failing k is exactly k, per mode.
  std::map<int, long long> trade_fails;
  std::map<int, long long> invariant_fails;
  // Non-weighted games still robust after escalation (must stay 0).
  long long inconclusive = 0;

  long long trade_fails_at(int k) const {
    auto it = trade_fails.find(k);
    return it == trade_fails.end() ? 0 : it->second;
  }
  long long invariant_fails_at(int k) const {
    auto it = invariant_fails.find(k);
    return it == invariant_fails.end() ? 0 : it->second;
  }
};

CountReport classify_all(int n, const ClassifyOptions& opts);

// CSV row in Table format: n,CG,WG,N-2T,N-3T with further N-kT columns only
// when some game first fails beyond k = 3.
std::string count_report_csv_header(const CountReport& rep);
std::string count_report_csv_row(const CountReport& rep);

enum class FormulaCheck { CgR1, WgR1, CgT2, CgT1 };

struct FormulaReport {
  FormulaCheck which;
  struct Line {
    int n;
    long long formula_value;
    long long enumerated_value;
    bool match;
  };
  std::vector<Line> lines;
  bool all_match = true;
};

// Closed-form counts against enumeration for every n <= n_max:
//   cg(n, r=1) = 2^n - 1
//   wg(n, r=1) = 2^n - 1 for n <= 5, (n^4 - 6n^3 + 23n^2 - 18n + 12)/12 after
//   cg(n, t=2) = F(n+6) - (n^2 + 4n + 8)
//   cg(n, t=1) = n (all weighted)
FormulaReport formula_check(FormulaCheck which, int n_max);

enum class ConjectureTarget {
  T3R2FamilyExactness, // 2-TR-not-3-TR games with t=3, r=2 are exactly the lemma_6_1 family
  T3ThreeTradeRobust,  // every 3-trade robust game with t=3 is weighted
  R2ThreeTradeRobust,  // every 3-trade robust game with r=2 is weighted
};

struct ConjectureReport {
  ConjectureTarget target;
  int n_max = 0;
  long long games_scanned = 0;
  std::vector<CharacteristicInvariants> counterexamples; // expected empty
};

ConjectureReport conjecture_scan(ConjectureTarget target, int n_max, int threads = 1);

} // namespace tlab
