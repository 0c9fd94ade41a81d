// feasibility.hpp
// Exact feasibility of { A x >= b, x >= 0 } over the rationals, with a point
// in the feasible region when one exists.
//
// Two routes, both templated over the rational backend:
//   * fourier_motzkin - projection with gcd row normalization and domination
//     filtering (valid because all variables are non-negative). Used for few
//     variables.
//   * simplex_phase1 - textbook phase-1 simplex with Bland's rule.
// Callers pick per variable count and retry with BigRat on Rat64 overflow.

#pragma once

#include "tlab/rational.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <vector>

namespace tlab {

template <class Q>
struct LinearSystem {
  int nvars = 0;
  std::vector<std::vector<Q>> lhs; // each row: nvars coefficients
  std::vector<Q> rhs;              // row . x >= rhs
};

namespace detail {

// Scale a row so that its entries are coprime integers (sign preserved).
template <class Q>
void normalize_row(std::vector<Q>& row, Q& rhs);

inline void normalize_row_impl(std::vector<Rat64>& row, Rat64& rhs) {
  long long l = 1;
  auto lcm_acc = [&](const Rat64& q) {
    __int128 g = std::gcd(l, q.den());
    __int128 v = (__int128)l / g * q.den();
    if (v > INT64_MAX) throw RatOverflow();
    l = (long long)v;
  };
  for (auto& q : row) lcm_acc(q);
  lcm_acc(rhs);
  long long g = 0;
  auto scale = [&](Rat64& q) {
    q *= Rat64(l);
    g = std::gcd(g, q.num());
  };
  for (auto& q : row) scale(q);
  scale(rhs);
  if (g > 1) {
    for (auto& q : row) q /= Rat64(g);
    rhs /= Rat64(g);
  }
}

inline void normalize_row_impl(std::vector<BigRat>& row, BigRat& rhs) {
  BigInt l = 1;
  for (auto& q : row) l = boost::multiprecision::lcm(l, BigInt(boost::multiprecision::denominator(q)));
  l = boost::multiprecision::lcm(l, BigInt(boost::multiprecision::denominator(rhs)));
  BigInt g = 0;
  auto scale = [&](BigRat& q) {
    q *= BigRat(l);
    g = boost::multiprecision::gcd(g, BigInt(boost::multiprecision::numerator(q)));
  };
  for (auto& q : row) scale(q);
  scale(rhs);
  if (g > 1) {
    BigRat gg(g);
    for (auto& q : row) q /= gg;
    rhs /= gg;
  }
}

template <class Q>
void normalize_row(std::vector<Q>& row, Q& rhs) {
  normalize_row_impl(row, rhs);
}

// Drop rows implied by another row: with x >= 0, row r is implied by r' when
// r.lhs >= r'.lhs componentwise and r.rhs <= r'.rhs.
template <class Q>
void domination_filter(std::vector<std::vector<Q>>& lhs, std::vector<Q>& rhs) {
  size_t m = lhs.size();
  std::vector<char> dead(m, 0);
  for (size_t i = 0; i < m; ++i) {
    if (dead[i]) continue;
    for (size_t j = 0; j < m; ++j) {
      if (i == j || dead[j] || dead[i]) continue;
      bool i_weaker = rhs[i] <= rhs[j];
      if (!i_weaker) continue;
      bool geq = true;
      for (size_t k = 0; k < lhs[i].size() && geq; ++k)
        if (lhs[i][k] < lhs[j][k]) geq = false;
      if (geq) {
        // Keep j; i is implied. Break ties on identical rows by index.
        if (lhs[i] == lhs[j] && rhs[i] == rhs[j] && i < j) { dead[j] = 1; continue; }
        dead[i] = 1;
      }
    }
  }
  size_t w = 0;
  for (size_t i = 0; i < m; ++i)
    if (!dead[i]) {
      if (w != i) { lhs[w] = std::move(lhs[i]); rhs[w] = std::move(rhs[i]); }
      ++w;
    }
  lhs.resize(w);
  rhs.resize(w);
}

} // namespace detail

// Fourier-Motzkin with back substitution. Eliminates the last variable first;
// the returned point takes each variable at its max lower bound (>= 0).
template <class Q>
std::optional<std::vector<Q>> fourier_motzkin(LinearSystem<Q> sys) {
  struct Level {
    std::vector<std::vector<Q>> lhs; // rows mentioning the eliminated var
    std::vector<Q> rhs;
  };
  std::vector<Level> levels;

  for (auto& row : sys.lhs) assert((int)row.size() == sys.nvars);

  for (int v = sys.nvars - 1; v >= 0; --v) {
    Level lvl;
    std::vector<size_t> lower, upper;
    std::vector<std::vector<Q>> next_lhs;
    std::vector<Q> next_rhs;
    for (size_t i = 0; i < sys.lhs.size(); ++i) {
      int s = sign_of(sys.lhs[i][v]);
      if (s > 0) lower.push_back(i);
      else if (s < 0) upper.push_back(i);
      else {
        auto row = sys.lhs[i];
        row.resize(v);
        next_lhs.push_back(std::move(row));
        next_rhs.push_back(sys.rhs[i]);
      }
    }
    // Combine each upper bound with each lower bound; the implicit x_v >= 0
    // pairs with upper bounds to give rest-only constraints.
    for (size_t ui : upper) {
      for (size_t li : lower) {
        const auto& up = sys.lhs[ui];
        const auto& lo = sys.lhs[li];
        Q a = lo[v];        // > 0
        Q mb = -up[v];      // > 0
        std::vector<Q> row(v);
        for (int k = 0; k < v; ++k) row[k] = up[k] * a + lo[k] * mb;
        Q rhs = sys.rhs[ui] * a + sys.rhs[li] * mb;
        detail::normalize_row(row, rhs);
        next_lhs.push_back(std::move(row));
        next_rhs.push_back(rhs);
      }
      // 0 <= x_v <= upper bound
      std::vector<Q> row(sys.lhs[ui].begin(), sys.lhs[ui].begin() + v);
      Q rhs = sys.rhs[ui];
      if (v > 0) detail::normalize_row(row, rhs);
      next_lhs.push_back(std::move(row));
      next_rhs.push_back(rhs);
    }
    for (size_t i : lower) {
      lvl.lhs.push_back(sys.lhs[i]);
      lvl.rhs.push_back(sys.rhs[i]);
    }
    for (size_t i : upper) {
      lvl.lhs.push_back(sys.lhs[i]);
      lvl.rhs.push_back(sys.rhs[i]);
    }
    levels.push_back(std::move(lvl));
    detail::domination_filter(next_lhs, next_rhs);
    sys.lhs = std::move(next_lhs);
    sys.rhs = std::move(next_rhs);
    sys.nvars = v;
  }

  for (const Q& rhs : sys.rhs)
    if (sign_of(rhs) > 0) return std::nullopt; // 0 >= positive

  // Back substitution, first eliminated variable last.
  std::vector<Q> x(levels.size());
  for (int v = 0; v < (int)levels.size(); ++v) {
    const Level& lvl = levels[(size_t)(levels.size() - 1 - v)];
    Q lo = Q(0), hi;
    bool has_hi = false;
    for (size_t i = 0; i < lvl.lhs.size(); ++i) {
      Q rest = lvl.rhs[i];
      for (int k = 0; k < v; ++k) rest -= lvl.lhs[i][k] * x[k];
      Q c = lvl.lhs[i][v];
      if (sign_of(c) > 0) {
        Q bound = rest / c;
        if (bound > lo) lo = bound;
      } else {
        Q bound = rest / c; // c < 0 flips the inequality
        if (!has_hi || bound < hi) { hi = bound; has_hi = true; }
      }
    }
    assert(!has_hi || lo <= hi);
    x[v] = lo;
  }
  return x;
}

// Phase-1 simplex (Bland's rule, exact pivots). Returns a feasible point of
// { A x >= b, x >= 0 } or nullopt.
template <class Q>
std::optional<std::vector<Q>> simplex_phase1(const LinearSystem<Q>& sys) {
  const int n = sys.nvars;
  const int m = (int)sys.lhs.size();
  if (m == 0) return std::vector<Q>(n, Q(0));

  // Standard form: for each row, A x - s = b with s >= 0. Rows with b <= 0
  // start with the slack basic (s = -b >= 0); rows with b > 0 get an
  // artificial variable. Minimize the artificial sum.
  int n_art = 0;
  std::vector<int> art_col(m, -1);
  for (int i = 0; i < m; ++i)
    if (sign_of(sys.rhs[i]) > 0) art_col[i] = n + m + n_art++;

  const int ncols = n + m + n_art;
  std::vector<std::vector<Q>> T(m, std::vector<Q>(ncols + 1, Q(0)));
  std::vector<int> basis(m);

  for (int i = 0; i < m; ++i) {
    Q sgn = art_col[i] >= 0 ? Q(1) : Q(-1); // keep rhs >= 0
    for (int k = 0; k < n; ++k) T[i][k] = sys.lhs[i][k] * sgn;
    T[i][n + i] = -sgn; // slack, coefficient -1 before sign fix
    T[i][ncols] = sys.rhs[i] * sgn;
    if (art_col[i] >= 0) {
      T[i][art_col[i]] = Q(1);
      basis[i] = art_col[i];
    } else {
      basis[i] = n + i; // slack basic with value -b >= 0
    }
  }

  // Objective row: sum of artificial rows (reduced costs for min sum a_i).
  std::vector<Q> z(ncols + 1, Q(0));
  for (int i = 0; i < m; ++i)
    if (art_col[i] >= 0)
      for (int k = 0; k <= ncols; ++k) z[k] += T[i][k];
  for (int i = 0; i < m; ++i)
    if (art_col[i] >= 0) z[art_col[i]] = Q(0);

  auto pivot = [&](int pr, int pc) {
    Q inv = Q(1) / T[pr][pc];
    for (int k = 0; k <= ncols; ++k) T[pr][k] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == pr || is_zero(T[i][pc])) continue;
      Q f = T[i][pc];
      for (int k = 0; k <= ncols; ++k) T[i][k] -= f * T[pr][k];
    }
    if (!is_zero(z[pc])) {
      Q f = z[pc];
      for (int k = 0; k <= ncols; ++k) z[k] -= f * T[pr][k];
    }
    basis[pr] = pc;
  };

  while (true) {
    int pc = -1;
    for (int k = 0; k < ncols; ++k)
      if (sign_of(z[k]) > 0) { pc = k; break; } // Bland: lowest index
    if (pc < 0) break;
    int pr = -1;
    for (int i = 0; i < m; ++i) {
      if (sign_of(T[i][pc]) <= 0) continue;
      if (pr < 0) { pr = i; continue; }
      Q cur = T[i][ncols] / T[i][pc];
      Q best = T[pr][ncols] / T[pr][pc];
      if (cur < best || (cur == best && basis[i] < basis[pr])) pr = i;
    }
    if (pr < 0) return std::nullopt; // unbounded phase-1: cannot happen
    pivot(pr, pc);
  }

  if (sign_of(z[ncols]) != 0) return std::nullopt; // min artificial sum > 0

  std::vector<Q> x(n, Q(0));
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = T[i][ncols];
  return x;
}

} // namespace tlab
