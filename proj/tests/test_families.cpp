#include "tlab/families.hpp"

#include "tlab/weights.hpp"

#include <doctest.h>

using namespace tlab;

TEST_CASE("family generators") {
  CHECK(generate({"unsc", {}}) == CharacteristicInvariants{{5, 10}, {{5, 4}}});
  CHECK(generate({"canada", {}}) == CharacteristicInvariants{{2, 8}, {{1, 6}}});
  CHECK(generate({"fm_smallest", {}}) ==
        CharacteristicInvariants{{2, 2, 3}, {{2, 1, 0}, {1, 0, 3}}});
  CHECK(generate({"lemma_5_1", {{"m", 3}}}) ==
        CharacteristicInvariants{{2, 3, 3}, {{2, 0, 1}, {1, 1, 2}}});
  CHECK(generate({"lemma_6_1_first", {{"k1", 0}, {"k2", 0}, {"k3", 0}, {"l", 0}}}) ==
        CharacteristicInvariants{{3, 3, 5}, {{2, 2, 3}, {1, 2, 5}}});
  CHECK(generate({"lemma_6_1_second", {{"k1", 0}, {"k2", 0}, {"l", 0}}}) ==
        CharacteristicInvariants{{3, 3, 5}, {{1, 1, 2}, {0, 1, 4}}});
  CHECK(generate({"n11_matrices", {{"i", 1}}}) ==
        generate({"lemma_6_1_first", {{"k1", 0}, {"k2", 0}, {"k3", 0}, {"l", 0}}}));

  for (auto& name : std::vector<std::string>{"unsc", "canada", "fm_smallest", "t4_n9"})
    CHECK(validate_invariants(generate({name, {}})).valid);
  for (long long m = 3; m <= 7; ++m) {
    CHECK(validate_invariants(generate({"lemma_5_1", {{"m", m}}})).valid);
    CHECK(validate_invariants(generate({"lemma_5_2", {{"m", m}}})).valid);
  }
  for (int i = 1; i <= 4; ++i)
    CHECK(validate_invariants(generate({"n11_matrices", {{"i", i}}})).valid);

  CHECK_THROWS_AS(generate({"lemma_5_1", {{"m", 2}}}), std::invalid_argument);
  CHECK_THROWS_AS(generate({"lemma_5_1", {}}), std::invalid_argument);
  CHECK_THROWS_AS(generate({"n11_matrices", {{"i", 5}}}), std::invalid_argument);
  CHECK_THROWS_AS(generate({"no_such_family", {}}), std::invalid_argument);
}

TEST_CASE("invariant robustness boundaries of the section-5 families") {
  // lemma_5_1(m): first invariant failure at exactly m (m = 3, 4 here; the
  // acceptance suite extends to m = 5)
  for (long long m = 3; m <= 4; ++m) {
    auto ci = generate({"lemma_5_1", {{"m", m}}});
    RobustnessReport rob = find_failure(ci, TradeMode::InvariantTrade, (int)m);
    REQUIRE(rob.fails_at == (int)m);
    REQUIRE(find_failure(ci, TradeMode::InvariantTrade, (int)m - 1).robust());
    CHECK_FALSE(decide_weighted(ci).has_value());
  }

  // lemma_5_2(3): robust through 3, fails at 4, with the closing certificate
  auto l52 = generate({"lemma_5_2", {{"m", 3}}});
  REQUIRE(find_failure(l52, TradeMode::InvariantTrade, 3).robust());
  RobustnessReport rob = find_failure(l52, TradeMode::InvariantTrade, 4);
  REQUIRE(rob.fails_at == 4);

  // (m-1) copies of the first row plus two of the third equal m l_1 + l_5
  for (long long m = 3; m <= 4; ++m) {
    auto ci = generate({"lemma_5_2", {{"m", m}}});
    VectorialTrade v;
    v.pre = {{{2, 1, 0}, (int)m - 1}, {{1, 0, (int)m}, 2}};
    v.post = {{{2, 0, 1}, (int)m}, {{0, (int)m - 1, (int)m}, 1}};
    REQUIRE(verify_vectorial(ci, v, TradeMode::InvariantTrade));
  }
}

TEST_CASE("the smallest 3-robust-but-not-4 game") {
  auto ci = generate({"fm_smallest", {}});
  REQUIRE(find_failure(ci, TradeMode::InvariantTrade, 3).robust());
  RobustnessReport rob = find_failure(ci, TradeMode::InvariantTrade, 4);
  REQUIRE(rob.fails_at == 4);
  CHECK(rob.certificate->pre ==
        std::vector<std::pair<TypeVec, int>>{{{2, 1, 0}, 2}, {{1, 0, 3}, 2}});
  CHECK(rob.certificate->post ==
        std::vector<std::pair<TypeVec, int>>{{{2, 0, 1}, 3}, {{0, 2, 3}, 1}});
}

TEST_CASE("type lifting preserves the robustness boundary") {
  auto base = generate({"lemma_5_1", {{"m", 3}}});
  auto lifted = lift_types(base, TradeMode::InvariantTrade);
  CHECK(lifted.t() == 4);
  CHECK(lifted.r() == base.r());
  CHECK(validate_invariants(lifted).valid);
  CHECK(lifted.nbar == TypeVec{2, 2, 3, 3});
  CHECK(lifted.rows == std::vector<TypeVec>{{2, 2, 0, 1}, {2, 1, 1, 2}});

  REQUIRE(find_failure(lifted, TradeMode::InvariantTrade, 2).robust());
  RobustnessReport rob = find_failure(lifted, TradeMode::InvariantTrade, 3);
  REQUIRE(rob.fails_at == 3);

  // lifting twice keeps stacking fresh classes
  auto twice = lift_types(lifted, TradeMode::InvariantTrade);
  CHECK(twice.t() == 5);
  CHECK(validate_invariants(twice).valid);
  REQUIRE(find_failure(twice, TradeMode::InvariantTrade, 2).robust());
  REQUIRE(find_failure(twice, TradeMode::InvariantTrade, 3).fails_at == 3);

  // a base with vetoers gets null padding instead
  CharacteristicInvariants with_vetoers{{2, 3}, {{2, 1}}};
  REQUIRE(validate_invariants(with_vetoers).valid);
  auto lifted2 = lift_types(with_vetoers, TradeMode::Trade);
  CHECK(lifted2.nbar == TypeVec{2, 3, 2});
  CHECK(lifted2.rows == std::vector<TypeVec>{{2, 1, 0}});
  CHECK(validate_invariants(lifted2).valid);
}

TEST_CASE("lemma_6_1 membership") {
  for (int l = 0; l <= 2; ++l) {
    CHECK(is_lemma_6_1_instance(
        generate({"lemma_6_1_first", {{"k1", 1}, {"k2", 0}, {"k3", 0}, {"l", l}}})));
    CHECK(is_lemma_6_1_instance(generate({"lemma_6_1_second", {{"k1", 0}, {"k2", 1}, {"l", l}}})));
  }
  CHECK_FALSE(is_lemma_6_1_instance(generate({"fm_smallest", {}})));
  CHECK_FALSE(is_lemma_6_1_instance(generate({"n11_matrices", {{"i", 3}}})));
  CHECK(is_lemma_6_1_instance(generate({"n11_matrices", {{"i", 1}}})));
  CHECK(is_lemma_6_1_instance(generate({"n11_matrices", {{"i", 2}}})));
}

TEST_CASE("the four 11-player matrices and the 9-player 4-class game") {
  for (int i = 1; i <= 4; ++i) {
    auto ci = generate({"n11_matrices", {{"i", i}}});
    REQUIRE(find_failure(ci, TradeMode::Trade, 2).robust());
    REQUIRE(find_failure(ci, TradeMode::Trade, 3).fails_at == 3);
    CHECK_FALSE(decide_weighted(ci).has_value());
  }
  auto t4 = generate({"t4_n9", {}});
  REQUIRE(find_failure(t4, TradeMode::Trade, 2).robust());
  REQUIRE(find_failure(t4, TradeMode::Trade, 3).fails_at == 3);
}
