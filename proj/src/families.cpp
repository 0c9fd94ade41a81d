#include "tlab/families.hpp"

#include <stdexcept>

namespace tlab {

namespace {

long long param(const FamilySpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end())
    throw std::invalid_argument("family '" + spec.name + "' needs parameter '" + key + "'");
  return it->second;
}

CharacteristicInvariants checked(CharacteristicInvariants ci, const std::string& name) {
  InvariantsValidation v = validate_invariants(ci);
  if (!v.valid)
    throw std::logic_error("family '" + name + "' produced invalid invariants: " +
                           v.violations.front());
  return ci;
}

} // namespace

CharacteristicInvariants generate(const FamilySpec& spec) {
  const std::string& f = spec.name;
  if (f == "unsc")
    return checked({{5, 10}, {{5, 4}}}, f);
  if (f == "canada")
    return checked({{2, 8}, {{1, 6}}}, f);
  if (f == "fm_smallest")
    return checked({{2, 2, 3}, {{2, 1, 0}, {1, 0, 3}}}, f);
  if (f == "lemma_5_1") {
    int m = (int)param(spec, "m");
    if (m < 3) throw std::invalid_argument("lemma_5_1: m >= 3 required");
    return checked({{2, m, m}, {{2, 0, 1}, {1, 1, m - 1}}}, f);
  }
  if (f == "lemma_5_2") {
    int m = (int)param(spec, "m");
    if (m < 3) throw std::invalid_argument("lemma_5_2: m >= 3 required");
    return checked({{2, m, m}, {{2, 1, 0}, {2, 0, 2}, {1, 0, m}, {0, m, m - 1}}}, f);
  }
  if (f == "lemma_6_1_first") {
    int k1 = (int)param(spec, "k1"), k2 = (int)param(spec, "k2");
    int k3 = (int)param(spec, "k3"), l = (int)param(spec, "l");
    if (k1 < 0 || k2 < 0 || k3 < 0 || l < 0)
      throw std::invalid_argument("lemma_6_1_first: parameters must be >= 0");
    int n1 = 3 + k1 + 2 * l, n2 = 3 + k2, n3 = 5 + k3 + 2 * l;
    return checked({{n1, n2, n3},
                    {{n1 - (l + 1), n2 - 1, n3 - (l + 2)}, {n1 - 2 * (l + 1), n2 - 1, n3}}},
                   f);
  }
  if (f == "lemma_6_1_second") {
    int k1 = (int)param(spec, "k1"), k2 = (int)param(spec, "k2"), l = (int)param(spec, "l");
    if (k1 < 0 || k2 < 0 || l < 0)
      throw std::invalid_argument("lemma_6_1_second: parameters must be >= 0");
    int n1 = 3 + k1 + 2 * l, n2 = 3 + k2;
    return checked({{n1, n2, 5 + 2 * l}, {{l + 1, 1, l + 2}, {0, 1, 2 * (l + 2)}}}, f);
  }
  if (f == "n11_matrices") {
    int i = (int)param(spec, "i");
    TypeVec nbar{3, 3, 5};
    switch (i) {
      case 1: return checked({nbar, {{2, 2, 3}, {1, 2, 5}}}, f);
      case 2: return checked({nbar, {{1, 1, 2}, {0, 1, 4}}}, f);
      case 3: return checked({nbar, {{3, 3, 0}, {3, 0, 4}, {2, 3, 2}, {0, 3, 5}}}, f);
      case 4: return checked({nbar, {{3, 0, 0}, {2, 0, 2}, {0, 3, 1}, {0, 0, 5}}}, f);
      default: throw std::invalid_argument("n11_matrices: i must be in 1..4");
    }
  }
  if (f == "t4_n9")
    return checked({{1, 2, 3, 3},
                    {{1, 0, 1, 0}, {0, 2, 0, 1}, {0, 1, 2, 0}, {0, 1, 1, 2}, {0, 0, 3, 2}}},
                   f);
  throw std::invalid_argument("unknown family '" + f + "'");
}

CharacteristicInvariants lift_types(const CharacteristicInvariants& base, TradeMode mode) {
  (void)mode; // one construction preserves the boundary in both modes
  InvariantsValidation v = validate_invariants(base);
  if (!v.valid)
    throw std::invalid_argument("lift_types: invalid base invariants: " + v.violations.front());
  const int t = base.t();

  // Adding two veto players (or two nulls) leaves every k-invariant-trade
  // and k-trade verdict unchanged: any trade of the padded game drops to one
  // of the base game by deleting the padded class and conversely. The padded
  // class is a genuinely new equivalence class as long as the base has no
  // class of the same kind.
  bool has_vetoers = true, has_nulls = true;
  for (const TypeVec& row : base.rows) {
    if (row[0] != base.nbar[0]) has_vetoers = false;
    if (row[t - 1] != 0) has_nulls = false;
  }

  CharacteristicInvariants out;
  if (!has_vetoers) {
    out.nbar.push_back(2);
    out.nbar.insert(out.nbar.end(), base.nbar.begin(), base.nbar.end());
    for (const TypeVec& row : base.rows) {
      TypeVec r{2};
      r.insert(r.end(), row.begin(), row.end());
      out.rows.push_back(std::move(r));
    }
  } else if (!has_nulls) {
    out.nbar = base.nbar;
    out.nbar.push_back(2);
    for (TypeVec row : base.rows) {
      row.push_back(0);
      out.rows.push_back(std::move(row));
    }
  } else {
    throw std::invalid_argument(
        "lift_types: base already has both vetoers and nulls; reduce it first");
  }

  InvariantsValidation lv = validate_invariants(out);
  if (!lv.valid)
    throw std::logic_error("lift_types: lifted invariants invalid: " + lv.violations.front());
  return out;
}

bool is_lemma_6_1_instance(const CharacteristicInvariants& ci) {
  if (ci.t() != 3 || ci.r() != 2) return false;
  const int n1 = ci.nbar[0], n2 = ci.nbar[1], n3 = ci.nbar[2];
  if (n2 < 3) return false;

  // First sub-family: n1 = 3+k1+2l, n2 = 3+k2, n3 = 5+k3+2l.
  for (int l = 0; 3 + 2 * l <= n1; ++l) {
    if (5 + 2 * l > n3) break;
    CharacteristicInvariants cand{
        {n1, n2, n3},
        {{n1 - (l + 1), n2 - 1, n3 - (l + 2)}, {n1 - 2 * (l + 1), n2 - 1, n3}}};
    std::sort(cand.rows.begin(), cand.rows.end(), row_order_less);
    if (cand == ci && validate_invariants(cand).valid) return true;
  }

  // Second sub-family: n3 = 5+2l fixes l.
  if (n3 >= 5 && (n3 - 5) % 2 == 0) {
    int l = (n3 - 5) / 2;
    if (n1 >= 3 + 2 * l) {
      CharacteristicInvariants cand{{n1, n2, n3}, {{l + 1, 1, l + 2}, {0, 1, 2 * (l + 2)}}};
      std::sort(cand.rows.begin(), cand.rows.end(), row_order_less);
      if (cand == ci && validate_invariants(cand).valid) return true;
    }
  }
  return false;
}

} // namespace tlab
