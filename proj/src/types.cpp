#include "tlab/types.hpp"

namespace tlab {

TypeOrder compare_types(const TypeVec& a, const TypeVec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("compare_types: length mismatch");
  long long pa = 0, pb = 0;
  bool ge = true, le = true;
  for (size_t k = 0; k < a.size(); ++k) {
    pa += a[k];
    pb += b[k];
    if (pa < pb) ge = false;
    if (pa > pb) le = false;
  }
  if (ge && le) return TypeOrder::Equal;
  if (ge) return TypeOrder::Dominates;
  if (le) return TypeOrder::Dominated;
  return TypeOrder::Incomparable;
}

std::string type_to_string(const TypeVec& v) {
  std::string s = "(";
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(v[k]);
  }
  s += ")";
  return s;
}

} // namespace tlab
