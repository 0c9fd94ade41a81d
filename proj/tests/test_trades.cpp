#include "tlab/trades.hpp"

#include "tlab/enumeration.hpp"
#include "tlab/families.hpp"
#include "tlab/weights.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace tlab;

namespace {

PlayerPartition block_partition(const TypeVec& nbar) {
  PlayerPartition part;
  part.totally_ordered = true;
  int p = 0;
  for (int sz : nbar) {
    std::vector<int> cls;
    for (int i = 0; i < sz; ++i) cls.push_back(p++);
    part.classes.push_back(std::move(cls));
  }
  return part;
}

} // namespace

TEST_CASE("verify_transform") {
  SimpleGame canada = reconstruct({{2, 8}, {{1, 6}}});
  PlayerPartition part = block_partition({2, 8});

  VectorialTrade v = make_vectorial({{1, 6}, {1, 6}}, {{2, 4}, {0, 8}});
  TradingTransform t = expand_vectorial(v, part);
  CHECK(verify_transform(canada, t) == TransformVerdict::ValidCertificate);

  TradingTransform same{{canada.minimal_winning()[0], canada.minimal_winning()[1]},
                        {canada.minimal_winning()[0], canada.minimal_winning()[1]}};
  CHECK(verify_transform(canada, same) == TransformVerdict::BalancedNotCertificate);

  TradingTransform bad{{Coalition::of({0, 1, 2})}, {Coalition::of({0, 1})}};
  CHECK(verify_transform(canada, bad) == TransformVerdict::Unbalanced);
}

TEST_CASE("verify_vectorial") {
  CharacteristicInvariants seven{{2, 2, 3}, {{2, 1, 0}, {1, 0, 3}}};
  VectorialTrade v;
  v.pre = {{{2, 1, 0}, 2}, {{1, 0, 3}, 2}};
  v.post = {{{2, 0, 1}, 3}, {{0, 2, 3}, 1}};
  CHECK(verify_vectorial(seven, v, TradeMode::InvariantTrade));
  CHECK(verify_vectorial(seven, v, TradeMode::Trade));

  VectorialTrade empty;
  CHECK_THROWS_AS(verify_vectorial(seven, empty, TradeMode::Trade), std::invalid_argument);

  // unbalanced trade is rejected, not an error
  VectorialTrade bad = v;
  bad.post[0].second = 2;
  CHECK_FALSE(verify_vectorial(seven, bad, TradeMode::Trade));

  // pre types must be rows in invariant mode
  CharacteristicInvariants canada{{2, 8}, {{1, 6}}};
  VectorialTrade minimal_pre;
  minimal_pre.pre = {{{2, 5}, 2}};
  minimal_pre.post = {{{2, 4}, 1}, {{2, 6}, 1}};
  // (2,6) is winning, so this is no certificate in either mode
  CHECK_FALSE(verify_vectorial(canada, minimal_pre, TradeMode::Trade));

  VectorialTrade lemma51;
  lemma51.pre = {{{1, 1, 2}, 3}};
  lemma51.post = {{{2, 0, 0}, 1}, {{1, 0, 3}, 1}, {{0, 3, 3}, 1}};
  CHECK(verify_vectorial(generate({"lemma_5_1", {{"m", 3}}}), lemma51,
                         TradeMode::InvariantTrade));
}

TEST_CASE("expand_vectorial small cases") {
  // single slot per side, one class
  PlayerPartition one = block_partition({3});
  VectorialTrade v1 = make_vectorial({{1}}, {{1}});
  TradingTransform t1 = expand_vectorial(v1, one);
  REQUIRE(t1.pre.size() == 1);
  CHECK(t1.pre[0] == t1.post[0]);
  CHECK(t1.pre[0].size() == 1);

  // counts (2,1) against (1,1,1) in one class of three players
  VectorialTrade v2;
  v2.pre = {{{2}, 1}, {{1}, 1}};
  v2.post = {{{1}, 3}};
  CHECK_THROWS_AS(expand_vectorial(v2, one), std::invalid_argument); // 3 != 2 slots

  VectorialTrade v3;
  v3.pre = {{{2}, 1}, {{1}, 2}};   // slots of sizes 2,1,1
  v3.post = {{{2}, 2}, {{0}, 1}};  // slots of sizes 2,2,0
  TradingTransform t3 = expand_vectorial(v3, one);
  for (int p = 0; p < 3; ++p) {
    int a = 0, b = 0;
    for (auto& c : t3.pre) a += c.contains(p);
    for (auto& c : t3.post) b += c.contains(p);
    REQUIRE(a == b);
  }
}

TEST_CASE("expansion of random balanced vectorial trades stays balanced") {
  std::mt19937 rng(2024);
  for (int it = 0; it < 300; ++it) {
    std::uniform_int_distribution<int> tdist(1, 4), jdist(1, 5), ndist(1, 5);
    int t = tdist(rng), j = jdist(rng);
    TypeVec nbar(t);
    for (int k = 0; k < t; ++k) nbar[k] = ndist(rng);
    std::vector<TypeVec> pre, post;
    for (int i = 0; i < j; ++i) {
      TypeVec s(t);
      for (int k = 0; k < t; ++k)
        s[k] = std::uniform_int_distribution<int>(0, nbar[k])(rng);
      pre.push_back(s);
    }
    // random decomposition of the column sums into j valid parts
    bool ok = true;
    std::vector<TypeVec> parts(j, TypeVec(t, 0));
    for (int k = 0; k < t && ok; ++k) {
      int left = 0;
      for (auto& s : pre) left += s[k];
      for (int i = 0; i < j; ++i) {
        int cap = std::min(left, nbar[k]);
        int lo = std::max(0, left - (j - 1 - i) * nbar[k]);
        if (lo > cap) { ok = false; break; }
        int v = std::uniform_int_distribution<int>(lo, cap)(rng);
        parts[i][k] = v;
        left -= v;
      }
      if (left != 0) ok = false;
    }
    if (!ok) continue;
    post = parts;

    PlayerPartition part = block_partition(nbar);
    TradingTransform tt = expand_vectorial(make_vectorial(pre, post), part);
    int n = 0;
    for (int sz : nbar) n += sz;
    for (int p = 0; p < n; ++p) {
      int a = 0, b = 0;
      for (auto& c : tt.pre) a += c.contains(p);
      for (auto& c : tt.post) b += c.contains(p);
      REQUIRE(a == b);
    }
    // per-slot types match the vectorial trade
    std::vector<TypeVec> got_pre, got_post;
    for (auto& c : tt.pre) got_pre.push_back(part.type_of(c));
    for (auto& c : tt.post) got_post.push_back(part.type_of(c));
    std::sort(got_pre.begin(), got_pre.end(), row_order_less);
    std::sort(got_post.begin(), got_post.end(), row_order_less);
    std::sort(pre.begin(), pre.end(), row_order_less);
    std::sort(post.begin(), post.end(), row_order_less);
    REQUIRE(got_pre == pre);
    REQUIRE(got_post == post);
  }
}

TEST_CASE("find_failure on the named games") {
  RobustnessReport canada = find_failure({{2, 8}, {{1, 6}}}, TradeMode::InvariantTrade, 6);
  REQUIRE(canada.fails_at == 2);
  REQUIRE(canada.certificate.has_value());
  CHECK(canada.certificate->pre == std::vector<std::pair<TypeVec, int>>{{{1, 6}, 2}});
  CHECK(canada.certificate->post ==
        std::vector<std::pair<TypeVec, int>>{{{2, 4}, 1}, {{0, 8}, 1}});

  RobustnessReport unsc_t = find_failure({{5, 10}, {{5, 4}}}, TradeMode::Trade, 6);
  CHECK(unsc_t.robust());
  RobustnessReport unsc_i = find_failure({{5, 10}, {{5, 4}}}, TradeMode::InvariantTrade, 6);
  CHECK(unsc_i.robust());

  RobustnessReport l51 = find_failure(generate({"lemma_5_1", {{"m", 4}}}),
                                      TradeMode::InvariantTrade, 6);
  CHECK(l51.fails_at == 4);

  CHECK_THROWS_AS(find_failure({{2, 8}, {{1, 6}}}, TradeMode::Trade, 1),
                  std::invalid_argument);
}

TEST_CASE("min_failure_pair") {
  auto [kt, ki] = min_failure_pair(generate({"fm_smallest", {}}), 6);
  REQUIRE(kt.has_value());
  REQUIRE(ki.has_value());
  CHECK(*kt == 2);
  CHECK(*ki == 4);

  auto [ct, cci] = min_failure_pair({{2, 8}, {{1, 6}}}, 6);
  CHECK(*ct == 2);
  CHECK(*cci == 2);

  CHECK_THROWS_AS(min_failure_pair({{5, 10}, {{5, 4}}}, 6), std::invalid_argument);
}

TEST_CASE("trade and invariant failures agree with the DP oracle on small games") {
  for (int n = 1; n <= 5; ++n) {
    enumerate_complete(n, {}, [&](const CharacteristicInvariants& ci) {
      // all games here are weighted: robust in both modes
      REQUIRE(find_failure(ci, TradeMode::Trade, 4).robust());
      for (int j = 2; j <= 3; ++j)
        REQUIRE_FALSE(test::dp_trade_feasible(ci, TradeMode::Trade, j));
    });
  }
}

TEST_CASE("invariant failure never precedes trade failure") {
  // over all non-weighted complete games with six players
  long long nonweighted = 0;
  enumerate_complete(6, {}, [&](const CharacteristicInvariants& ci) {
    if (decide_weighted(ci)) return;
    ++nonweighted;
    auto [kt, ki] = min_failure_pair(ci, 6);
    REQUIRE(kt.has_value());
    REQUIRE(ki.has_value());
    REQUIRE(*kt <= *ki);
    REQUIRE(*kt == 2); // every non-weighted game this small fails a 2-trade
  });
  CHECK(nonweighted == 60);
}

TEST_CASE("post-side restriction toggle preserves small verdicts") {
  SearchOptions strict;
  strict.post_maximal_losing = true;
  RobustnessReport a = find_failure({{2, 8}, {{1, 6}}}, TradeMode::InvariantTrade, 4, strict);
  CHECK(a.fails_at == 2);
  RobustnessReport b =
      find_failure(generate({"fm_smallest", {}}), TradeMode::InvariantTrade, 6, strict);
  CHECK(b.fails_at == 4);
}
