// types.hpp
// Coalition type vectors: per-class member counts s = (s_1,...,s_t) together
// with the dominance order given by comparison of partial sums.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tlab {

using TypeVec = std::vector<int>;

enum class TypeOrder {
  Dominates,    // a ⪰ b, a != b, plus the equal case handled separately
  Dominated,
  Equal,
  Incomparable,
};

// a ⪰ b iff every prefix sum of a is >= the matching prefix sum of b.
TypeOrder compare_types(const TypeVec& a, const TypeVec& b);

inline std::vector<long long> partial_sums(const TypeVec& v) {
  std::vector<long long> p(v.size());
  long long acc = 0;
  for (size_t k = 0; k < v.size(); ++k) { acc += v[k]; p[k] = acc; }
  return p;
}

inline bool dominates_eq(const TypeVec& a, const TypeVec& b) {
  auto c = compare_types(a, b);
  return c == TypeOrder::Dominates || c == TypeOrder::Equal;
}

// Canonical row order: descending lexicographic. Comparing entries
// left-to-right is equivalent to comparing prefix sums left-to-right (equal
// prefixes force equal prefix sums), so this is the lex-by-partial-sums order
// used for matrix rows.
inline bool row_order_less(const TypeVec& a, const TypeVec& b) { return a > b; }

std::string type_to_string(const TypeVec& v);

} // namespace tlab
