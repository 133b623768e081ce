#include "doctest.h"

#include "coxcrystal/classify.hpp"
#include "coxcrystal/ef_game.hpp"
#include "coxcrystal/finite_group.hpp"

using namespace coxcrystal;

namespace {

QuotientGroup quotient_of(const char* family, std::int64_t m) {
  CrystalGroup g = build_affine_group(parse_family(family));
  return make_quotient(g, m);
}

}  // namespace

TEST_CASE("zero rounds never distinguish") {
  AbelianGroup z2({2}), z3({3});
  EfReport r = ef_game(z2, z3, 0);
  CHECK(r.duplicator_wins);
  CHECK(r.rounds == 0);
}

TEST_CASE("one round separates groups with distinct unnested atomic content") {
  // an involution has no atomic match in a group of odd order: x^-1 = x on
  // one side cannot be answered on the other
  AbelianGroup z2({2}), z3({3});
  CHECK(least_distinguishing_rounds(z2, z3, 3) == 1);

  // cyclic 4 vs Klein four: an order-4 element fails x^-1 = x, every
  // non-identity Klein element satisfies it
  AbelianGroup z4({4}), k4({2, 2});
  CHECK(least_distinguishing_rounds(z4, k4, 3) == 1);
}

TEST_CASE("isomorphic pairs survive every played depth") {
  QuotientGroup s3 = quotient_of("A~1", 3);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    TableGroup shuffled = shuffled_copy(s3, seed);
    for (int k = 0; k <= 3; ++k) {
      EfReport r = ef_game(s3, shuffled, k);
      CAPTURE(seed);
      CAPTURE(k);
      CHECK(r.duplicator_wins);
    }
    CHECK_FALSE(least_distinguishing_rounds(s3, shuffled, 3).has_value());
  }
}

TEST_CASE("the game is symmetric in its arguments") {
  AbelianGroup z4({4}), k4({2, 2}), z6({6});
  QuotientGroup s3 = quotient_of("A~1", 3);
  CHECK(least_distinguishing_rounds(z4, k4, 3) == least_distinguishing_rounds(k4, z4, 3));
  CHECK(least_distinguishing_rounds(z6, s3, 3) == least_distinguishing_rounds(s3, z6, 3));
}

TEST_CASE("spoiler wins are monotone in the round count") {
  AbelianGroup z6({6});
  QuotientGroup s3 = quotient_of("A~1", 3);
  std::optional<int> least = least_distinguishing_rounds(s3, z6, 3);
  REQUIRE(least.has_value());
  REQUIRE(*least >= 1);
  for (int k = 0; k < *least; ++k) CHECK(ef_game(s3, z6, k).duplicator_wins);
  for (int k = *least; k <= 3; ++k) CHECK_FALSE(ef_game(s3, z6, k).duplicator_wins);
}

TEST_CASE("non-isomorphic pairs of order at most 8 split within three rounds") {
  QuotientGroup d4 = quotient_of("A~1", 4);  // dihedral of order 8
  AbelianGroup z8({8}), z42({4, 2}), z222({2, 2, 2});

  struct Pair {
    const FiniteGroupView* a;
    const FiniteGroupView* b;
  };
  for (Pair p : {Pair{&d4, &z8}, Pair{&d4, &z42}, Pair{&d4, &z222}, Pair{&z8, &z42},
                 Pair{&z8, &z222}, Pair{&z42, &z222}}) {
    std::optional<int> least = least_distinguishing_rounds(*p.a, *p.b, 3);
    REQUIRE(least.has_value());
    CHECK(*least >= 1);
    CHECK(*least <= 3);
  }
}

TEST_CASE("positions explored are reported and caps are enforced") {
  AbelianGroup z4({4}), k4({2, 2});
  EfReport r = ef_game(z4, k4, 1);
  CHECK_FALSE(r.duplicator_wins);
  CHECK(r.positions_explored > 0);

  AbelianGroup big({65});
  CHECK_THROWS_AS(ef_game(big, big, 1), DomainError);   // order cap 64
  CHECK_THROWS_AS(ef_game(z4, z4, 5), DomainError);     // round cap 4
}
