#include "tlab/weights.hpp"

#include "tlab/feasibility.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace tlab {

namespace {

// The separation system in difference space. With d_k = w_k - w_{k+1} for
// k < t-1 and d_{t-1} = w_{t-1}, a constraint c.w >= 1 becomes
// sum_k psum(c)_k d_k >= 1 (Abel summation), and the strict descent
// w_0 > ... > w_{t-1} >= 0 becomes d_k >= 1 (k < t-1), d_{t-1} >= 0.
// Substituting e_k = d_k - 1 on the descent slots leaves a pure
// { A e >= b, e >= 0 } system.
struct DiffSystem {
  int t;
  std::vector<std::vector<long long>> rows; // prefix-sum differences
};

DiffSystem build_diff_system(const LatticeGame& g) {
  const TypeLattice& L = g.lattice();
  const int t = L.t();
  DiffSystem sys{t, {}};
  for (int p : g.rows()) {
    for (int q : g.shift_maximal_losing()) {
      std::vector<long long> d(t);
      for (int k = 0; k < t; ++k) d[k] = L.psum(p, k) - L.psum(q, k);
      sys.rows.push_back(std::move(d));
    }
  }
  // With d >= 0 a row implies every componentwise-larger row; keep minima.
  std::vector<char> dead(sys.rows.size(), 0);
  for (size_t i = 0; i < sys.rows.size(); ++i) {
    if (dead[i]) continue;
    for (size_t j = 0; j < sys.rows.size(); ++j) {
      if (i == j || dead[j] || dead[i]) continue;
      bool i_ge = true;
      for (int k = 0; k < t && i_ge; ++k)
        if (sys.rows[i][k] < sys.rows[j][k]) i_ge = false;
      if (i_ge) {
        if (sys.rows[i] == sys.rows[j] && i < j) { dead[j] = 1; continue; }
        dead[i] = 1;
      }
    }
  }
  size_t w = 0;
  for (size_t i = 0; i < sys.rows.size(); ++i)
    if (!dead[i]) sys.rows[w++] = std::move(sys.rows[i]);
  sys.rows.resize(w);
  return sys;
}

template <class Q>
std::optional<std::vector<Q>> solve_diff_system(const DiffSystem& ds) {
  LinearSystem<Q> sys;
  sys.nvars = ds.t;
  for (const auto& P : ds.rows) {
    std::vector<Q> row(ds.t);
    long long shift = 0;
    for (int k = 0; k < ds.t; ++k) {
      row[k] = Q(P[k]);
      if (k < ds.t - 1) shift += P[k];
    }
    sys.lhs.push_back(std::move(row));
    sys.rhs.push_back(Q(1 - shift));
  }
  if (ds.t <= 4) return fourier_motzkin(std::move(sys));
  return simplex_phase1(sys);
}

long long q_to_ll(const Rat64& q) {
  if (q.den() != 1) throw std::logic_error("expected integral rational");
  return q.num();
}

std::vector<long long> weights_from_solution(const std::vector<Rat64>& e, int t) {
  // d from e, w as suffix sums of d, then clear denominators and reduce.
  std::vector<Rat64> w(t);
  Rat64 acc(0);
  for (int k = t - 1; k >= 0; --k) {
    Rat64 d = (k == t - 1) ? e[k] : e[k] + Rat64(1);
    acc += d;
    w[k] = acc;
  }
  long long l = 1;
  for (auto& q : w) l = std::lcm(l, q.den());
  std::vector<long long> out(t);
  long long g = 0;
  for (int k = 0; k < t; ++k) {
    out[k] = q_to_ll(w[k] * Rat64(l));
    g = std::gcd(g, out[k]);
  }
  if (g > 1)
    for (auto& v : out) v /= g;
  return out;
}

std::vector<long long> weights_from_solution(const std::vector<BigRat>& e, int t) {
  std::vector<BigRat> w(t);
  BigRat acc(0);
  for (int k = t - 1; k >= 0; --k) {
    BigRat d = (k == t - 1) ? e[k] : e[k] + 1;
    acc += d;
    w[k] = acc;
  }
  BigInt l = 1;
  for (auto& q : w) l = boost::multiprecision::lcm(l, BigInt(boost::multiprecision::denominator(q)));
  std::vector<BigInt> scaled(t);
  BigInt g = 0;
  for (int k = 0; k < t; ++k) {
    scaled[k] = boost::multiprecision::numerator(w[k] * BigRat(l));
    g = boost::multiprecision::gcd(g, scaled[k]);
  }
  std::vector<long long> out(t);
  for (int k = 0; k < t; ++k) {
    BigInt v = g > 1 ? scaled[k] / g : scaled[k];
    if (v > INT64_MAX) throw std::overflow_error("decide_weighted: weights exceed int64");
    out[k] = (long long)v;
  }
  return out;
}

} // namespace

std::optional<WeightedRepresentation> decide_weighted_on(const LatticeGame& g) {
  const TypeLattice& L = g.lattice();
  const int t = L.t();
  DiffSystem ds = build_diff_system(g);

  std::optional<std::vector<long long>> weights;
  try {
    auto e = solve_diff_system<Rat64>(ds);
    if (!e) return std::nullopt;
    weights = weights_from_solution(*e, t);
  } catch (const RatOverflow&) {
    auto e = solve_diff_system<BigRat>(ds);
    if (!e) return std::nullopt;
    weights = weights_from_solution(*e, t);
  }

  WeightedRepresentation rep;
  rep.nbar = L.nbar();
  rep.class_weights = std::move(*weights);

  long long q = 0;
  bool first = true;
  for (int id : g.rows()) {
    long long wsum = 0;
    for (int k = 0; k < t; ++k) wsum += (long long)L.count_of(id, k) * rep.class_weights[k];
    if (first || wsum < q) { q = wsum; first = false; }
  }
  rep.quota = q;

  // Strict separation over the whole lattice; failure would be a solver bug.
  for (int id = 0; id < L.size(); ++id) {
    long long wsum = 0;
    for (int k = 0; k < t; ++k) wsum += (long long)L.count_of(id, k) * rep.class_weights[k];
    if (g.winning(id) ? wsum < q : wsum >= q)
      throw std::logic_error("decide_weighted: separation check failed");
  }
  return rep;
}

std::optional<WeightedRepresentation> decide_weighted(const CharacteristicInvariants& ci) {
  InvariantsValidation v = validate_invariants(ci);
  if (!v.valid)
    throw std::invalid_argument("decide_weighted: invalid invariants: " + v.violations.front());
  TypeLattice L(ci.nbar);
  LatticeGame g(L);
  g.assign(row_ids(ci, L));
  return decide_weighted_on(g);
}

std::optional<WeightedRepresentation> decide_weighted(const SimpleGame& game) {
  if (!is_complete(game)) return std::nullopt; // not even swap robust
  return decide_weighted(extract_invariants(game).ci);
}

std::optional<WeightedRepresentation> closed_form_r1(const CharacteristicInvariants& ci) {
  if (ci.r() != 1 || ci.t() != 2) return std::nullopt;
  const long long n1 = ci.nbar[0], n2 = ci.nbar[1];
  const long long m1 = ci.rows[0][0], m2 = ci.rows[0][1];
  if (m1 >= n1 || m2 <= 0) return std::nullopt; // vetoers / nulls not covered
  if (m2 != 1 && m2 != n2 - 1) return std::nullopt;

  WeightedRepresentation rep;
  rep.nbar = ci.nbar;
  if (m2 == 1) {
    rep.class_weights = {n2, 1};
    rep.quota = m1 * n2 + 1;
  } else {
    long long c1 = std::min(n1, m1 + n2 - 2);
    if (c1 == n1) {
      rep.class_weights = {n1 - m1 + 2, n1 - m1 + 1};
    } else {
      rep.class_weights = {n2, n2 - 1};
    }
    rep.quota = m1 * rep.class_weights[0] + (n2 - 1) * rep.class_weights[1];
  }

  for (int x = 0; x <= n1; ++x)
    for (int y = 0; y <= n2; ++y) {
      TypeVec s{x, y};
      long long w = rep.weight_of(s);
      if (winning_type(ci, s) ? w < rep.quota : w >= rep.quota)
        throw std::logic_error("closed_form_r1: formula failed separation");
    }
  return rep;
}

MPParameters mp_parameters(const CharacteristicInvariants& ci) {
  if (ci.t() != 2) throw std::invalid_argument("mp_parameters: requires t = 2");
  InvariantsValidation v = validate_invariants(ci);
  if (!v.valid)
    throw std::invalid_argument("mp_parameters: invalid invariants: " + v.violations.front());

  const int n1 = ci.nbar[0], n2 = ci.nbar[1];
  auto is_win = [&](int x, int y) { return winning_type(ci, TypeVec{x, y}); };

  MPParameters mp;
  mp.M = Rat64(0);
  bool have_m = false, have_p = false;
  long long m_span = 0, p_span = 0; // c-a and d'-b' of the current witnesses

  for (int x = 0; x <= n1; ++x)
    for (int y = 0; y <= n2; ++y) {
      if (!is_win(x, y)) continue;
      for (int xl = 0; xl <= n1; ++xl)
        for (int yl = 0; yl <= n2; ++yl) {
          if (is_win(xl, yl)) continue;
          if (xl >= x) {
            // y > yl always holds here; otherwise (xl,yl) would dominate.
            Rat64 q(xl - x, y - yl);
            long long span = xl - x;
            bool better = !have_m || q > mp.M ||
                          (q == mp.M && (span < m_span ||
                                         (span == m_span &&
                                          TypeVec{x, y, xl, yl} <
                                              TypeVec{mp.m_winning[0], mp.m_winning[1],
                                                      mp.m_losing[0], mp.m_losing[1]})));
            if (better) {
              mp.M = q;
              mp.m_winning = {x, y};
              mp.m_losing = {xl, yl};
              m_span = span;
              have_m = true;
            }
          } else {
            Rat64 q(yl - y, x - xl);
            long long span = yl - y;
            bool better = !have_p || q > mp.P ||
                          (q == mp.P && (span < p_span ||
                                         (span == p_span &&
                                          TypeVec{x, y, xl, yl} <
                                              TypeVec{mp.p_winning[0], mp.p_winning[1],
                                                      mp.p_losing[0], mp.p_losing[1]})));
            if (better) {
              mp.P = q;
              mp.p_winning = {x, y};
              mp.p_losing = {xl, yl};
              p_span = span;
              have_p = true;
            }
          }
        }
    }

  // Maxima bounds: 0 <= M < 1 (domain may be empty, then M = 0) and P >= 1.
  if (!have_p || mp.P < Rat64(1))
    throw std::logic_error("mp_parameters: P < 1 should be impossible");
  if (mp.M >= Rat64(1)) throw std::logic_error("mp_parameters: M >= 1 should be impossible");
  return mp;
}

bool mp_weighted_test(const CharacteristicInvariants& ci) {
  return mp_parameters(ci).product() < Rat64(1);
}

TypeTradePair two_trade_certificate_t2(const CharacteristicInvariants& ci) {
  MPParameters mp = mp_parameters(ci);
  if (mp.product() < Rat64(1))
    throw std::logic_error("two_trade_certificate_t2: game is weighted");

  // M > 0 here (else MP = 0), so all four witnesses exist.
  long long a = mp.m_winning[0], b = mp.m_winning[1];
  long long c = mp.m_losing[0], d = mp.m_losing[1];
  long long a2 = mp.p_winning[0], b2 = mp.p_winning[1];
  long long c2 = mp.p_losing[0], d2 = mp.p_losing[1];

  std::vector<TypeVec> pre, post;
  if (c - a < a2 - c2) {
    // (c+c'-a, d+d'-b) must be winning by extremality of P.
    TypeVec aa{(int)(c + c2 - a), (int)(d + d2 - b)};
    if (!winning_type(ci, aa))
      throw std::logic_error("two_trade_certificate_t2: case (c) vector not winning");
    pre = {TypeVec{(int)a, (int)b}, aa};
    post = {TypeVec{(int)c, (int)d}, TypeVec{(int)c2, (int)d2}};
  } else if (b - d <= d2 - b2) {
    // Delete surplus units so the post side matches the pre sums exactly.
    long long dx = (c + c2) - (a + a2);
    long long dy = (d + d2) - (b + b2);
    long long take_c2 = std::min(dx, c2), take_c = dx - take_c2;
    long long take_d2 = std::min(dy, d2), take_d = dy - take_d2;
    pre = {TypeVec{(int)a, (int)b}, TypeVec{(int)a2, (int)b2}};
    post = {TypeVec{(int)(c - take_c), (int)(d - take_d)},
            TypeVec{(int)(c2 - take_c2), (int)(d2 - take_d2)}};
  } else {
    TypeVec cc{(int)(a + a2 - c2), (int)(b + b2 - d2)};
    if (winning_type(ci, cc))
      throw std::logic_error("two_trade_certificate_t2: case (b) vector not losing");
    pre = {TypeVec{(int)a, (int)b}, TypeVec{(int)a2, (int)b2}};
    post = {TypeVec{(int)c2, (int)d2}, cc};
  }

  // Walk the pre side down to shift-minimal types. Dropping a member or
  // shifting one to the weaker class lowers a pre type one cover step; the
  // matching adjustment keeps a post type losing (it only moves down).
  const int n2max = ci.nbar[1];
  bool moved = true;
  while (moved) {
    moved = false;
    for (TypeVec& p : pre) {
      if (p[1] >= 1) {
        TypeVec dropped{p[0], p[1] - 1};
        if (winning_type(ci, dropped)) {
          for (TypeVec& q : post)
            if (q[1] >= 1) { --q[1]; break; }
          p = dropped;
          moved = true;
          break;
        }
      }
      if (p[0] >= 1 && p[1] < n2max) {
        TypeVec shifted{p[0] - 1, p[1] + 1};
        if (winning_type(ci, shifted)) {
          bool fixed = false;
          for (TypeVec& q : post)
            if (q[0] >= 1 && q[1] < n2max) { --q[0]; ++q[1]; fixed = true; break; }
          if (!fixed)
            throw std::logic_error("two_trade_certificate_t2: no shiftable post vector");
          p = shifted;
          moved = true;
          break;
        }
      }
    }
  }

  for (const TypeVec& p : pre)
    if (std::find(ci.rows.begin(), ci.rows.end(), p) == ci.rows.end())
      throw std::logic_error("two_trade_certificate_t2: pre side not shift-minimal");
  for (const TypeVec& q : post)
    if (winning_type(ci, q))
      throw std::logic_error("two_trade_certificate_t2: post side not losing");

  std::sort(pre.begin(), pre.end(), row_order_less);
  std::sort(post.begin(), post.end(), row_order_less);
  return TypeTradePair{std::move(pre), std::move(post)};
}

} // namespace tlab
