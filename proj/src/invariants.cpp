#include "tlab/invariants.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tlab {

InvariantsValidation validate_invariants(const CharacteristicInvariants& ci) {
  InvariantsValidation out;
  auto fail = [&](const std::string& msg) {
    out.valid = false;
    out.violations.push_back(msg);
  };

  const int t = ci.t();
  if (t == 0) { fail("empty nbar"); return out; }
  for (int v : ci.nbar)
    if (v <= 0) { fail("class sizes must be positive"); return out; }
  if (ci.rows.empty()) { fail("no shift-minimal winning rows"); return out; }

  for (size_t p = 0; p < ci.rows.size(); ++p) {
    if ((int)ci.rows[p].size() != t) { fail("row length mismatch"); return out; }
    for (int k = 0; k < t; ++k)
      if (ci.rows[p][k] < 0 || ci.rows[p][k] > ci.nbar[k]) {
        fail("(i) row " + std::to_string(p + 1) + " out of 0..nbar range");
        break;
      }
  }
  if (!out.valid) return out;

  for (size_t p = 0; p < ci.rows.size(); ++p)
    for (size_t q = p + 1; q < ci.rows.size(); ++q)
      if (compare_types(ci.rows[p], ci.rows[q]) != TypeOrder::Incomparable)
        fail("(ii) rows " + std::to_string(p + 1) + " and " + std::to_string(q + 1) +
             " are dominance-comparable");

  if (t == 1) {
    if (ci.rows[0][0] <= 0) fail("(iii) t=1 requires m_{1,1} > 0");
  } else {
    for (int k = 0; k + 1 < t; ++k) {
      bool ok = false;
      for (const TypeVec& row : ci.rows)
        if (row[k] > 0 && row[k + 1] < ci.nbar[k + 1]) { ok = true; break; }
      if (!ok)
        fail("(iii) no row with m_k > 0 and m_{k+1} < n_{k+1} at k = " + std::to_string(k + 1));
    }
  }

  for (size_t p = 0; p + 1 < ci.rows.size(); ++p)
    if (!row_order_less(ci.rows[p], ci.rows[p + 1]))
      fail("(iv) rows not in canonical order at position " + std::to_string(p + 1));

  return out;
}

std::vector<int> row_ids(const CharacteristicInvariants& ci, const TypeLattice& L) {
  std::vector<int> ids;
  ids.reserve(ci.rows.size());
  for (const TypeVec& row : ci.rows) ids.push_back(L.id_of(row));
  return ids;
}

std::vector<TypeVec> shift_maximal_losing_types(const CharacteristicInvariants& ci) {
  TypeLattice L(ci.nbar);
  LatticeGame g(L);
  g.assign(row_ids(ci, L));
  std::vector<TypeVec> out;
  for (int id : g.shift_maximal_losing()) out.push_back(L.type_of(id));
  return out; // row_order iteration already gives canonical order
}

bool winning_type(const CharacteristicInvariants& ci, const TypeVec& sbar) {
  if ((int)sbar.size() != ci.t())
    throw std::invalid_argument("winning_type: wrong type length");
  for (int k = 0; k < ci.t(); ++k)
    if (sbar[k] < 0 || sbar[k] > ci.nbar[k])
      throw std::out_of_range("winning_type: type outside the lattice");
  for (const TypeVec& row : ci.rows)
    if (dominates_eq(sbar, row)) return true;
  return false;
}

ExtractedInvariants extract_invariants(const SimpleGame& game) {
  PlayerPartition part = partition_players(game);
  if (!part.totally_ordered)
    throw std::invalid_argument("extract_invariants: game is not complete");

  std::set<TypeVec> types;
  for (const Coalition& c : shift_minimal_winning(game)) types.insert(part.type_of(c));

  CharacteristicInvariants ci;
  ci.nbar = part.class_sizes();
  ci.rows.assign(types.begin(), types.end());
  std::sort(ci.rows.begin(), ci.rows.end(), row_order_less);

  InvariantsValidation v = validate_invariants(ci);
  if (!v.valid)
    throw std::logic_error("extract_invariants: extracted pair fails validation: " +
                           v.violations.front());
  return ExtractedInvariants{std::move(ci), std::move(part)};
}

namespace {

void expand_type(const TypeVec& s, const TypeVec& nbar, const std::vector<int>& offsets,
                 int k, uint64_t acc, std::vector<Coalition>& out) {
  if (k == (int)s.size()) {
    out.push_back(Coalition(acc));
    return;
  }
  // choose s[k] members out of class k (players offsets[k]..offsets[k]+n_k-1)
  std::vector<int> idx(s[k]);
  for (int i = 0; i < s[k]; ++i) idx[i] = i;
  while (true) {
    uint64_t bits = acc;
    for (int i : idx) bits |= uint64_t{1} << (offsets[k] + i);
    expand_type(s, nbar, offsets, k + 1, bits, out);
    int i = s[k] - 1;
    while (i >= 0 && idx[i] == nbar[k] - s[k] + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < s[k]; ++j) idx[j] = idx[j - 1] + 1;
  }
}

} // namespace

SimpleGame reconstruct(const CharacteristicInvariants& ci) {
  InvariantsValidation v = validate_invariants(ci);
  if (!v.valid)
    throw std::invalid_argument("reconstruct: invalid invariants: " + v.violations.front());
  if (ci.n() > 64) throw std::invalid_argument("reconstruct: more than 64 players");

  TypeLattice L(ci.nbar);
  LatticeGame g(L);
  g.assign(row_ids(ci, L));

  std::vector<int> offsets(ci.t());
  int off = 0;
  for (int k = 0; k < ci.t(); ++k) { offsets[k] = off; off += ci.nbar[k]; }

  long long count = 0;
  std::vector<TypeVec> min_types;
  for (int id : g.minimal_winning()) {
    TypeVec s = L.type_of(id);
    long long ways = 1;
    for (int k = 0; k < ci.t(); ++k) {
      long long c = 1;
      for (int i = 0; i < s[k]; ++i) c = c * (ci.nbar[k] - i) / (i + 1);
      ways *= c;
    }
    count += ways;
    if (count > 2'000'000)
      throw std::invalid_argument("reconstruct: minimal winning family too large to expand");
    min_types.push_back(std::move(s));
  }

  std::vector<Coalition> min_winning;
  min_winning.reserve((size_t)count);
  for (const TypeVec& s : min_types)
    expand_type(s, ci.nbar, offsets, 0, 0, min_winning);
  return SimpleGame(ci.n(), std::move(min_winning));
}

bool isomorphic(const SimpleGame& g1, const SimpleGame& g2) {
  return extract_invariants(g1).ci == extract_invariants(g2).ci;
}

} // namespace tlab
