#include "tlab/invariants.hpp"

#include "tlab/enumeration.hpp"
#include "tlab/families.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace tlab;

TEST_CASE("type comparison by partial sums") {
  CHECK(compare_types({2, 4}, {1, 5}) == TypeOrder::Dominates);
  CHECK(compare_types({1, 5}, {2, 4}) == TypeOrder::Dominated);
  CHECK(compare_types({1, 5}, {1, 5}) == TypeOrder::Equal);
  CHECK(compare_types({2, 0, 1}, {1, 1, 2}) == TypeOrder::Incomparable);
  CHECK_THROWS_AS(compare_types({1, 2}, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("dominance order on small lattices") {
  // partial order with maximum nbar and minimum 0
  TypeVec nbar{2, 3, 2};
  std::vector<TypeVec> all;
  test::for_all_types(nbar, [&](const TypeVec& s) { all.push_back(s); });
  CHECK((int)all.size() == 3 * 4 * 3);
  for (auto& a : all) {
    CHECK(dominates_eq(nbar, a));
    CHECK(dominates_eq(a, TypeVec{0, 0, 0}));
    CHECK(compare_types(a, a) == TypeOrder::Equal);
  }
  for (auto& a : all)
    for (auto& b : all)
      for (auto& c : all) {
        if (dominates_eq(a, b) && dominates_eq(b, c)) REQUIRE(dominates_eq(a, c));
        if (dominates_eq(a, b) && dominates_eq(b, a)) REQUIRE(a == b);
      }
}

TEST_CASE("validate_invariants conditions") {
  CHECK(validate_invariants({{5, 10}, {{5, 4}}}).valid);

  auto comparable = validate_invariants({{3, 3}, {{2, 1}, {1, 2}}});
  CHECK_FALSE(comparable.valid);
  CHECK(comparable.violations.front().find("(ii)") != std::string::npos);

  auto zero_first = validate_invariants({{2, 3}, {{0, 2}}});
  CHECK_FALSE(zero_first.valid);
  CHECK(zero_first.violations.front().find("(iii)") != std::string::npos);

  auto misordered = validate_invariants({{3, 3, 3}, {{1, 0, 3}, {2, 0, 1}}});
  CHECK_FALSE(misordered.valid);

  auto out_of_range = validate_invariants({{2, 2}, {{3, 0}}});
  CHECK_FALSE(out_of_range.valid);
  CHECK(out_of_range.violations.front().find("(i)") != std::string::npos);

  CHECK_FALSE(validate_invariants({{1}, {{0}}}).valid); // t=1 needs m > 0
  CHECK(validate_invariants({{4}, {{4}}}).valid);       // unanimity
}

TEST_CASE("extraction from explicit games") {
  SimpleGame unsc = reconstruct({{5, 10}, {{5, 4}}});
  ExtractedInvariants ex = extract_invariants(unsc);
  CHECK(ex.ci.nbar == TypeVec{5, 10});
  CHECK(ex.ci.rows == std::vector<TypeVec>{{5, 4}});

  SimpleGame canada = reconstruct({{2, 8}, {{1, 6}}});
  ExtractedInvariants exc = extract_invariants(canada);
  CHECK(exc.ci.nbar == TypeVec{2, 8});
  CHECK(exc.ci.rows == std::vector<TypeVec>{{1, 6}});

  CHECK_THROWS_AS(
      extract_invariants(SimpleGame(4, {Coalition::of({0, 1}), Coalition::of({2, 3})})),
      std::invalid_argument);
}

TEST_CASE("reconstruction") {
  SimpleGame canada = reconstruct({{2, 8}, {{1, 6}}});
  CHECK(canada.n() == 10);
  CHECK(canada.minimal_winning().size() == 112); // 56 of type (2,5), 56 of type (1,6)

  // minimal winning types are (2,5) and (1,6)
  std::set<std::pair<int, int>> types;
  for (const Coalition& m : canada.minimal_winning()) {
    int big = Coalition(m.bits() & 0b11).size();
    types.insert({big, m.size() - big});
  }
  CHECK(types == std::set<std::pair<int, int>>{{2, 5}, {1, 6}});

  SimpleGame sym = reconstruct({{5}, {{3}}}); // 3-out-of-5
  CHECK(sym.minimal_winning().size() == 10);
  for (const Coalition& m : sym.minimal_winning()) CHECK(m.size() == 3);

  // seven-player game with three classes: winning set matches the dominance rule
  CharacteristicInvariants seven{{2, 2, 3}, {{2, 1, 0}, {1, 0, 3}}};
  SimpleGame g = reconstruct(seven);
  PlayerPartition part;
  part.totally_ordered = true;
  part.classes = {{0, 1}, {2, 3}, {4, 5, 6}};
  for (uint64_t s = 0; s < (1u << 7); ++s) {
    TypeVec type = part.type_of(Coalition(s));
    REQUIRE(is_winning(g, Coalition(s)) == winning_type(seven, type));
  }

  CHECK_THROWS_AS(reconstruct({{2, 3}, {{0, 2}}}), std::invalid_argument);
}

TEST_CASE("shift-maximal losing matrices") {
  CHECK(shift_maximal_losing_types({{5, 10}, {{5, 4}}}) ==
        std::vector<TypeVec>{{5, 3}, {4, 10}});
  CHECK(shift_maximal_losing_types({{2, 8}, {{1, 6}}}) ==
        std::vector<TypeVec>{{2, 4}, {0, 8}});
  CHECK(shift_maximal_losing_types({{4}, {{4}}}) == std::vector<TypeVec>{{3}});
}

TEST_CASE("winning_type") {
  CharacteristicInvariants canada{{2, 8}, {{1, 6}}};
  CHECK(winning_type(canada, {2, 5}));
  CHECK_FALSE(winning_type(canada, {1, 5}));
  CHECK(winning_type(canada, {2, 8}));
  CHECK_THROWS_AS(winning_type(canada, {3, 0}), std::out_of_range);
  CHECK_THROWS_AS(winning_type(canada, {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("isomorphism via invariants") {
  SimpleGame unsc = reconstruct({{5, 10}, {{5, 4}}});
  // relabel players: move the veto block to the high indices
  std::vector<Coalition> relabeled;
  for (const Coalition& m : unsc.minimal_winning()) {
    uint64_t bits = 0;
    for (int p : m.members()) bits |= uint64_t{1} << ((p + 10) % 15);
    relabeled.emplace_back(bits);
  }
  SimpleGame shuffled(15, relabeled);
  CHECK(isomorphic(unsc, shuffled));

  SimpleGame canada = reconstruct({{2, 8}, {{1, 6}}});
  SimpleGame canada2 = reconstruct({{2, 8}, {{1, 6}}});
  CHECK(isomorphic(canada, canada2));
  CHECK_FALSE(isomorphic(reconstruct({{5, 5}, {{5, 4}}}), reconstruct({{2, 8}, {{1, 6}}})));
}

TEST_CASE("extract is inverse to reconstruct on all small complete games") {
  for (int n = 1; n <= 6; ++n) {
    enumerate_complete(n, {}, [&](const CharacteristicInvariants& ci) {
      REQUIRE(validate_invariants(ci).valid);
      ExtractedInvariants ex = extract_invariants(reconstruct(ci));
      REQUIRE(ex.ci == ci);
    });
  }
}

TEST_CASE("every type is winning xor dominated by a losing-matrix row") {
  auto check_game = [](const CharacteristicInvariants& ci) {
    auto Y = shift_maximal_losing_types(ci);
    test::for_all_types(ci.nbar, [&](const TypeVec& s) {
      bool win = winning_type(ci, s);
      bool dominated = false;
      for (const TypeVec& y : Y)
        if (dominates_eq(y, s)) dominated = true;
      REQUIRE(win == !dominated);
    });
    // rows of Y pairwise incomparable; no Y row dominates an M row
    for (size_t a = 0; a < Y.size(); ++a)
      for (size_t b = a + 1; b < Y.size(); ++b)
        REQUIRE(compare_types(Y[a], Y[b]) == TypeOrder::Incomparable);
    for (const TypeVec& y : Y)
      for (const TypeVec& m : ci.rows) REQUIRE_FALSE(dominates_eq(y, m));
  };
  for (int n = 1; n <= 6; ++n)
    enumerate_complete(n, {}, check_game);
  check_game(generate({"unsc", {}}));
  check_game(generate({"lemma_5_2", {{"m", 4}}}));
}
