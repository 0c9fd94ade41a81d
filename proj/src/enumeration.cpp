#include "tlab/enumeration.hpp"

#include "tlab/families.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace tlab {

namespace {

std::vector<TypeVec> compositions(int n, int t) {
  std::vector<TypeVec> out;
  TypeVec cur(t);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == t - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 1; v <= left - (t - 1 - pos); ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  if (t >= 1 && n >= t) rec(rec, 0, n);
  return out;
}

std::vector<TypeVec> all_compositions(int n, const EnumFilter& filter) {
  std::vector<TypeVec> comps;
  int t_lo = filter.t.value_or(1), t_hi = filter.t.value_or(n);
  for (int t = t_lo; t <= t_hi; ++t)
    for (auto& c : compositions(n, t)) comps.push_back(c);
  return comps;
}

// All valid row sets over one lattice: antichains in canonical order passing
// the class-separation condition, visited as id vectors (descending order).
void enumerate_rows(const TypeLattice& L, std::optional<int> r_filter,
                    const std::function<void(const std::vector<int>&)>& emit) {
  const int t = L.t();
  const auto& cand = L.row_order();
  const uint32_t full = (t == 1) ? 1u : (uint32_t{1} << (t - 1)) - 1;

  // Bit k of the mask: the row witnesses separation of classes k and k+1
  // (m_k > 0 and m_{k+1} < n_{k+1}); for t = 1 simply m > 0.
  std::vector<uint32_t> satmask(cand.size(), 0);
  std::vector<uint32_t> suffix(cand.size() + 1, 0);
  for (size_t p = 0; p < cand.size(); ++p) {
    int id = cand[p];
    uint32_t m = 0;
    if (t == 1) {
      if (L.count_of(id, 0) > 0) m = 1;
    } else {
      for (int k = 0; k + 1 < t; ++k)
        if (L.count_of(id, k) > 0 && L.count_of(id, k + 1) < L.nbar()[k + 1])
          m |= uint32_t{1} << k;
    }
    satmask[p] = m;
  }
  for (size_t p = cand.size(); p-- > 0;) suffix[p] = suffix[p + 1] | satmask[p];

  std::vector<int> chosen;
  auto dfs = [&](auto&& self, size_t from, uint32_t satisfied) -> void {
    for (size_t p = from; p < cand.size(); ++p) {
      if ((satisfied | suffix[p]) != full) break; // nothing ahead completes (iii)
      int id = cand[p];
      if (id == L.bottom_id()) continue; // all-zero row never valid
      bool ok = true;
      for (int c : chosen)
        if (L.dominates_eq_ids(c, id) || L.dominates_eq_ids(id, c)) { ok = false; break; }
      if (!ok) continue;
      chosen.push_back(id);
      uint32_t sat = satisfied | satmask[p];
      if (sat == full && (!r_filter || (int)chosen.size() == *r_filter)) emit(chosen);
      if (!r_filter || (int)chosen.size() < *r_filter) self(self, p + 1, sat);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0, 0);
}

CharacteristicInvariants to_invariants(const TypeLattice& L, const std::vector<int>& rows) {
  CharacteristicInvariants ci;
  ci.nbar = L.nbar();
  for (int id : rows) ci.rows.push_back(L.type_of(id));
  return ci;
}

// Parallelization unit: one composition. Workers pull compositions from a
// shared counter; per-composition results merge by plain addition.
void for_each_composition(const std::vector<TypeVec>& comps, int threads,
                          const std::function<void(const TypeVec&)>& run_comp) {
  if (threads <= 1 || comps.size() <= 1) {
    for (auto& c : comps) run_comp(c);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  int nw = std::min<int>(threads, (int)comps.size());
  for (int w = 0; w < nw; ++w)
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < comps.size(); i = next.fetch_add(1))
        run_comp(comps[i]);
    });
  for (auto& th : pool) th.join();
}

} // namespace

void enumerate_complete(int n, const EnumFilter& filter,
                        const std::function<void(const CharacteristicInvariants&)>& visit) {
  if (n < 1) throw std::invalid_argument("enumerate_complete: n must be >= 1");
  for (auto& nbar : all_compositions(n, filter)) {
    TypeLattice L(nbar);
    enumerate_rows(L, filter.r,
                   [&](const std::vector<int>& rows) { visit(to_invariants(L, rows)); });
  }
}

std::vector<CharacteristicInvariants> enumerate_complete(int n, const EnumFilter& filter) {
  std::vector<CharacteristicInvariants> out;
  enumerate_complete(n, filter, [&](const CharacteristicInvariants& ci) { out.push_back(ci); });
  return out;
}

namespace {

struct LocalCounts {
  long long total = 0;
  long long weighted = 0;
  std::map<int, long long> trade_fails;
  std::map<int, long long> invariant_fails;
  long long inconclusive = 0;
  std::vector<ClassificationRecord> records;
};

void classify_one(const TypeLattice& L, LatticeGame& game, const std::vector<int>& rows,
                  const ClassifyOptions& opts, LocalCounts& out) {
  game.assign(rows);
  out.total += 1;

  const TradeMode primary = opts.trade_mode ? TradeMode::Trade : TradeMode::InvariantTrade;
  auto quick = find_failure_on(game, primary, 2);

  bool weighted = false;
  if (!quick) weighted = decide_weighted_on(game).has_value();

  ClassificationRecord rec;
  const bool want_record = (bool)opts.record_sink;
  rec.t = L.t();
  rec.r = (int)rows.size();
  rec.weighted = weighted;

  if (weighted) {
    out.weighted += 1;
  } else {
    auto minimal_k = [&](TradeMode mode) {
      if (mode == primary && quick) return quick;
      auto res = find_failure_on(game, mode, opts.cap_k);
      if (!res && opts.cap_k < 6) res = find_failure_on(game, mode, 6); // escalation
      return res;
    };
    if (opts.trade_mode) {
      auto res = minimal_k(TradeMode::Trade);
      if (res) {
        out.trade_fails[res->first] += 1;
        rec.k_trade_fail = res->first;
        if (want_record) rec.certificate = res->second;
      } else {
        out.inconclusive += 1;
      }
    }
    if (opts.invariant_mode) {
      auto res = minimal_k(TradeMode::InvariantTrade);
      if (res) {
        out.invariant_fails[res->first] += 1;
        rec.k_invariant_fail = res->first;
        if (want_record && !rec.certificate) rec.certificate = res->second;
      } else if (!opts.trade_mode) {
        out.inconclusive += 1;
      }
    }
  }

  if (want_record) {
    rec.ci = to_invariants(L, rows);
    out.records.push_back(std::move(rec));
  }
}

} // namespace

CountReport classify_all(int n, const ClassifyOptions& opts) {
  if (opts.cap_k < 2) throw std::invalid_argument("classify_all: cap_k must be >= 2");
  if (!opts.trade_mode && !opts.invariant_mode)
    throw std::invalid_argument("classify_all: no robustness mode requested");

  CountReport total;
  total.n = n;
  total.filter = opts.filter;
  total.cap_k = opts.cap_k;

  std::mutex merge_mutex;
  auto run_comp = [&](const TypeVec& nbar) {
    TypeLattice L(nbar);
    LatticeGame game(L);
    LocalCounts local;
    enumerate_rows(L, opts.filter.r, [&](const std::vector<int>& rows) {
      classify_one(L, game, rows, opts, local);
    });
    std::lock_guard<std::mutex> lock(merge_mutex);
    total.total += local.total;
    total.weighted += local.weighted;
    for (auto& [k, v] : local.trade_fails) total.trade_fails[k] += v;
    for (auto& [k, v] : local.invariant_fails) total.invariant_fails[k] += v;
    total.inconclusive += local.inconclusive;
    if (opts.record_sink)
      for (auto& r : local.records) opts.record_sink(r);
  };

  for_each_composition(all_compositions(n, opts.filter), opts.threads, run_comp);
  return total;
}

std::string count_report_csv_header(const CountReport& rep) {
  int kmax = 3;
  for (auto& [k, v] : rep.trade_fails)
    if (v > 0) kmax = std::max(kmax, k);
  std::ostringstream os;
  os << "n,CG,WG";
  for (int k = 2; k <= kmax; ++k) os << ",N-" << k << "T";
  if (rep.inconclusive > 0) os << ",INC";
  return os.str();
}

std::string count_report_csv_row(const CountReport& rep) {
  int kmax = 3;
  const auto& fails = rep.trade_fails;
  for (auto& [k, v] : fails)
    if (v > 0) kmax = std::max(kmax, k);
  std::ostringstream os;
  os << rep.n << "," << rep.total << "," << rep.weighted;
  for (int k = 2; k <= kmax; ++k) {
    auto it = fails.find(k);
    os << "," << (it == fails.end() ? 0 : it->second);
  }
  if (rep.inconclusive > 0) os << "," << rep.inconclusive;
  return os.str();
}

namespace {

long long fibonacci(int k) {
  long long a = 0, b = 1;
  for (int i = 0; i < k; ++i) {
    long long c = a + b;
    a = b;
    b = c;
  }
  return a;
}

} // namespace

FormulaReport formula_check(FormulaCheck which, int n_max) {
  if (n_max < 1) throw std::invalid_argument("formula_check: n_max must be >= 1");
  FormulaReport rep;
  rep.which = which;
  for (int n = 1; n <= n_max; ++n) {
    FormulaReport::Line line;
    line.n = n;
    switch (which) {
      case FormulaCheck::CgR1: {
        line.formula_value = (1LL << n) - 1;
        long long count = 0;
        enumerate_complete(n, EnumFilter{std::nullopt, 1},
                           [&](const CharacteristicInvariants&) { ++count; });
        line.enumerated_value = count;
        break;
      }
      case FormulaCheck::WgR1: {
        if (n <= 5) {
          line.formula_value = (1LL << n) - 1;
        } else {
          long long nn = n;
          line.formula_value =
              (nn * nn * nn * nn - 6 * nn * nn * nn + 23 * nn * nn - 18 * nn + 12) / 12;
        }
        long long count = 0;
        enumerate_complete(n, EnumFilter{std::nullopt, 1},
                           [&](const CharacteristicInvariants& ci) {
                             if (decide_weighted(ci)) ++count;
                           });
        line.enumerated_value = count;
        break;
      }
      case FormulaCheck::CgT2: {
        line.formula_value = fibonacci(n + 6) - ((long long)n * n + 4 * n + 8);
        long long count = 0;
        enumerate_complete(n, EnumFilter{2, std::nullopt},
                           [&](const CharacteristicInvariants&) { ++count; });
        line.enumerated_value = count;
        break;
      }
      case FormulaCheck::CgT1: {
        line.formula_value = n;
        long long count = 0;
        enumerate_complete(n, EnumFilter{1, std::nullopt},
                           [&](const CharacteristicInvariants& ci) {
                             if (!decide_weighted(ci))
                               throw std::logic_error("one-class game not weighted");
                             ++count;
                           });
        line.enumerated_value = count;
        break;
      }
    }
    line.match = line.formula_value == line.enumerated_value;
    rep.all_match = rep.all_match && line.match;
    rep.lines.push_back(line);
  }
  return rep;
}

ConjectureReport conjecture_scan(ConjectureTarget target, int n_max, int threads) {
  ConjectureReport rep;
  rep.target = target;
  rep.n_max = n_max;

  EnumFilter filter;
  if (target == ConjectureTarget::T3R2FamilyExactness) filter = EnumFilter{3, 2};
  else if (target == ConjectureTarget::T3ThreeTradeRobust) filter = EnumFilter{3, std::nullopt};
  else filter = EnumFilter{std::nullopt, 2};

  std::mutex mu;
  for (int n = 6; n <= n_max; ++n) {
    auto run_comp = [&](const TypeVec& nbar) {
      TypeLattice L(nbar);
      LatticeGame game(L);
      long long scanned = 0;
      std::vector<CharacteristicInvariants> found;
      enumerate_rows(L, filter.r, [&](const std::vector<int>& rows) {
        ++scanned;
        game.assign(rows);
        auto f2 = find_failure_on(game, TradeMode::Trade, 2);
        if (target == ConjectureTarget::T3R2FamilyExactness) {
          CharacteristicInvariants ci = to_invariants(L, rows);
          bool family = is_lemma_6_1_instance(ci);
          bool boundary = false;
          if (!f2) boundary = find_failure_on(game, TradeMode::Trade, 3).has_value();
          if (family != boundary) found.push_back(std::move(ci));
        } else {
          if (f2) return;
          if (find_failure_on(game, TradeMode::Trade, 3)) return; // fails at 3
          if (!decide_weighted_on(game)) // 3-trade robust but not weighted
            found.push_back(to_invariants(L, rows));
        }
      });
      std::lock_guard<std::mutex> lock(mu);
      rep.games_scanned += scanned;
      for (auto& ci : found) rep.counterexamples.push_back(std::move(ci));
    };
    for_each_composition(all_compositions(n, filter), threads, run_comp);
  }
  return rep;
}

} // namespace tlab
